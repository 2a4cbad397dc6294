#include "novipot/invariants.hpp"

#include "novipot/errors.hpp"

#include <algorithm>
#include <numeric>

namespace novipot {

namespace {

const Rational kHalf{1, 2};

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void sort_blocks(std::vector<ThetaBlock>& blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const ThetaBlock& x, const ThetaBlock& y) {
        return x.k != y.k ? x.k < y.k : x.s < y.s;
    });
}

bool monotone(const TorusSpec& t) {
    return std::all_of(t.blocks.begin(), t.blocks.end(), [](const ThetaBlock& b) { return b.s == kHalf; });
}

/// Distinct boundary classes, up to sign, of Maslov-2 disks: one per factor.
long boundary_directions(const TorusSpec& t) { return static_cast<long>(t.blocks.size()) + t.equators(); }

nlohmann::json spectrum_witness(const TorusSpec& a, const TorusSpec& b) {
    const Rational sa = a.blocks[0].s;
    const Rational sb = b.blocks[0].s;
    for (int m = 0; m < 256; ++m) {
        for (const int sign : {1, -1}) {
            for (const auto& [from, other] : {std::pair{sa, sb}, std::pair{sb, sa}}) {
                const Rational x = from + (1 - 2 * from) * (sign * m);
                if (area_spectrum_contains(from, x) != area_spectrum_contains(other, x)) {
                    return {{"area", rational_to_json(x)},
                            {"a_contains", area_spectrum_contains(sa, x)},
                            {"b_contains", area_spectrum_contains(sb, x)}};
                }
            }
        }
    }
    throw DomainError("no spectrum witness found");
}

nlohmann::json count_json(const MinimalAreaCount& c) {
    return {{"area", rational_to_json(c.area)}, {"count", c.count}};
}

void enumerate_rest(int n, int k, int budget, std::vector<int>& ki, const Rational& s,
                    std::vector<ClassArea>& out) {
    const int i = static_cast<int>(ki.size());
    if (i == n) {
        RelativeClass c{k, ki};
        const Rational a = c.area(s);
        out.push_back({std::move(c), a});
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        ki.push_back(v);
        enumerate_rest(n, k, budget - v, ki, s, out);
        ki.pop_back();
    }
}

}  // namespace

TorusSpec TorusSpec::theta(int n, const Rational& s) {
    TorusSpec t{n, {{n, s}}};
    t.validate();
    return t;
}

TorusSpec TorusSpec::product(int n, std::vector<ThetaBlock> blocks) {
    sort_blocks(blocks);
    TorusSpec t{n, std::move(blocks)};
    t.validate();
    return t;
}

int TorusSpec::equators() const {
    return n - std::accumulate(blocks.begin(), blocks.end(), 0, [](int acc, const ThetaBlock& b) { return acc + b.k; });
}

bool TorusSpec::is_theta() const { return blocks.size() == 1 && blocks[0].k == n; }

void TorusSpec::validate() const {
    require(n >= 1, "torus dimension must be at least 1");
    for (const auto& b : blocks) {
        require(b.k >= 2, "theta blocks need k >= 2");
        require(b.s >= kHalf && b.s < 1, "block area parameter must lie in [1/2, 1)");
    }
    require(equators() >= 0, "blocks exceed the ambient dimension");
}

std::string TorusSpec::describe() const {
    if (is_theta()) return "theta(" + std::to_string(n) + ", " + to_string(blocks[0].s) + ")";
    std::string out;
    for (const auto& b : blocks) {
        if (!out.empty()) out += " x ";
        out += "theta(" + std::to_string(b.k) + ", " + to_string(b.s) + ")";
    }
    if (equators() > 0) {
        if (!out.empty()) out += " x ";
        out += "eq^" + std::to_string(equators());
    }
    return out;
}

nlohmann::json TorusSpec::to_json() const {
    auto list = nlohmann::json::array();
    for (const auto& b : blocks) list.push_back({{"k", b.k}, {"s", rational_to_json(b.s)}});
    return {{"kind", is_theta() ? "theta" : "product"}, {"n", n}, {"blocks", list}};
}

TorusSpec TorusSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n")) throw DomainError("torus spec needs an object with 'n'");
    const int n = j.at("n").get<int>();
    if (j.contains("blocks")) {
        std::vector<ThetaBlock> blocks;
        for (const auto& b : j.at("blocks")) {
            blocks.push_back({b.at("k").get<int>(), rational_from_json(b.at("s"))});
        }
        return product(n, std::move(blocks));
    }
    if (j.contains("s")) return theta(n, rational_from_json(j.at("s")));
    throw DomainError("torus spec needs 'blocks' or 's'");
}

Rational RelativeClass::area(const Rational& s) const {
    const int sum = std::accumulate(ki.begin(), ki.end(), 0);
    return Rational(s * (k - sum) + (1 - s) * sum);
}

bool area_spectrum_contains(const Rational& s, const Rational& a) {
    const Rational step = 1 - 2 * s;
    if (step == 0) return a == s;
    const Rational m = (a - s) / step;
    return is_integer(m);
}

bool spectrum_contains_half(const TorusSpec& t) {
    if (t.equators() > 0) return true;
    return std::any_of(t.blocks.begin(), t.blocks.end(), [](const ThetaBlock& b) {
        return area_spectrum_contains(b.s, kHalf);
    });
}

long disk_count(const TorusSpec& t) {
    long total = 2L * t.equators();
    for (const auto& b : t.blocks) total += 1 + static_cast<long>(b.k) * b.k;
    return total;
}

MinimalAreaCount minimal_area_count(const TorusSpec& t) {
    std::vector<MinimalAreaCount> parts;
    for (const auto& b : t.blocks) {
        const long k2 = static_cast<long>(b.k) * b.k;
        // at s = 1/2 the disk u and the k^2 disks through T/u share area 1/2
        parts.push_back(b.s == kHalf ? MinimalAreaCount{kHalf, 1 + k2} : MinimalAreaCount{Rational(1 - b.s), k2});
    }
    if (t.equators() > 0) parts.push_back({kHalf, 2L * t.equators()});
    MinimalAreaCount best{parts.front().area, 0};
    for (const auto& p : parts) best.area = std::min(best.area, p.area);
    for (const auto& p : parts) {
        if (p.area == best.area) best.count += p.count;
    }
    return best;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::spectrum: return "distinguished-by-spectrum";
        case Verdict::minimal_count: return "distinguished-by-minimal-count";
        case Verdict::boundary_pairs: return "distinguished-by-boundary-pairs";
        case Verdict::not_distinguished: return "not-distinguished";
    }
    return "unknown";
}

nlohmann::json Distinction::to_json() const {
    nlohmann::json j{{"verdict", to_string(verdict)}, {"witness", witness}, {"citations", citations}};
    if (conditional) j["tag"] = "conditional (Conj. toridistinct)";
    return j;
}

Distinction distinguish(const TorusSpec& a, const TorusSpec& b) {
    a.validate();
    b.validate();
    if (a.n != b.n) {
        throw DimensionError("tori live in (CP^1)^" + std::to_string(a.n) + " and (CP^1)^" + std::to_string(b.n));
    }
    TorusSpec ca = a;
    TorusSpec cb = b;
    sort_blocks(ca.blocks);
    sort_blocks(cb.blocks);
    Distinction d;
    const long da = disk_count(ca);
    const long db = disk_count(cb);
    if (ca == cb) {
        d.witness = {{"identical", true}};
        return d;
    }
    const bool ha = spectrum_contains_half(ca);
    const bool hb = spectrum_contains_half(cb);
    if (ha != hb) {
        d.verdict = Verdict::spectrum;
        d.witness = {{"area", rational_to_json(kHalf)}, {"a_contains", ha}, {"b_contains", hb}};
        d.citations = {"Prop. toridistinct1"};
        return d;
    }
    if (ca.is_theta() && cb.is_theta()) {
        d.verdict = Verdict::spectrum;
        d.witness = spectrum_witness(ca, cb);
        d.citations = {"Prop. toridistinct1"};
        return d;
    }
    if (monotone(ca) && monotone(cb) && boundary_directions(ca) != boundary_directions(cb)) {
        d.verdict = Verdict::boundary_pairs;
        d.witness = {{"a_boundary_classes", boundary_directions(ca)}, {"b_boundary_classes", boundary_directions(cb)}};
        d.citations = {"Prop. toridistinct1"};
        return d;
    }
    const auto ma = minimal_area_count(ca);
    const auto mb = minimal_area_count(cb);
    if (!(ma == mb)) {
        d.verdict = Verdict::minimal_count;
        d.conditional = true;
        d.witness = {{"a_minimal", count_json(ma)}, {"b_minimal", count_json(mb)}};
        d.citations = {"Conj. toridistinct", "Prop. HighMaslovArea"};
        return d;
    }
    d.witness = {{"a_disks", da}, {"b_disks", db}};
    if (da == db) d.citations = {"Rmk. (n-1)^2 = sum (k_i-1)^2"};
    return d;
}

std::vector<ClassArea> enumerate_maslov_classes(int n, const Rational& s, int max_k) {
    require(n >= 1, "n must be at least 1");
    require(s >= kHalf && s < 1, "s must lie in [1/2, 1)");
    require(max_k >= 1, "max_k must be at least 1");
    std::vector<ClassArea> out;
    std::vector<int> ki;
    for (int k = 1; k <= max_k; ++k) enumerate_rest(n, k, k, ki, s, out);
    return out;
}

bool min_area_check(int n, const Rational& s, int max_k) {
    const auto classes = enumerate_maslov_classes(n, s, max_k);
    Rational least = classes.front().area;
    for (const auto& c : classes) least = std::min(least, c.area);
    if (least != 1 - s) return false;
    return std::all_of(classes.begin(), classes.end(),
                       [&](const ClassArea& c) { return c.area != least || c.cls.k == 1; });
}

nlohmann::json InvariantsReport::to_json() const {
    auto checks = nlohmann::json::array();
    for (const auto& [s, ok] : min_area_checks) checks.push_back({{"s", rational_to_json(s)}, {"passed", ok}});
    return {{"torus", torus.to_json()},
            {"description", torus.describe()},
            {"disk_count", disks},
            {"minimal_area", count_json(minimal)},
            {"half_in_spectrum", half_in_spectrum},
            {"min_area_checks", checks}};
}

InvariantsReport invariants_report(const TorusSpec& t, int max_k) {
    t.validate();
    InvariantsReport r{t, disk_count(t), minimal_area_count(t), spectrum_contains_half(t), {}};
    for (const auto& b : t.blocks) r.min_area_checks.emplace_back(b.s, min_area_check(b.k, b.s, max_k));
    return r;
}

}  // namespace novipot
