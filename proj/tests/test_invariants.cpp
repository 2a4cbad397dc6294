#include "novipot/invariants.hpp"
#include "novipot/potentials.hpp"

#include <doctest.h>

#include <map>

using namespace novipot;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<ProductBlock> as_product_blocks(const TorusSpec& t) {
    std::vector<ProductBlock> out;
    for (const auto& b : t.blocks) out.push_back({b.k, b.s});
    return out;
}

// Area of every monomial read off the product potential: u_j^{+1} has area s_j,
// u_j^{-1} has area 1 - s_j, an equator monomial has area 1/2.
std::map<Rational, long> areas_from_potential(const TorusSpec& t) {
    const Lattice L(2);
    const auto p = product_potential(L, as_product_blocks(t), t.equators());
    const auto& vars = p.variables();
    std::map<Rational, long> out;
    for (const auto& [m, c] : p.terms()) {
        Rational area;
        bool found = false;
        for (std::size_t i = 0; i < vars.size() && !found; ++i) {
            if (m[i] == 0) continue;
            if (vars[i][0] == 'e') {
                area = q(1, 2);
                found = true;
            } else if (vars[i][0] == 'u') {
                const int j = std::stoi(vars[i].substr(2)) - 1;
                const Rational s = t.blocks.at(j).s;
                area = m[i] > 0 ? s : Rational(1 - s);
                found = true;
            }
        }
        REQUIRE(found);
        Rational coeff = 0;
        for (const auto& term : c.terms()) coeff += term.coefficient;
        out[area] += coeff.get_num().get_si();
    }
    return out;
}

// All theta products in dimension n with s drawn from `grid`.
void products(int n, int used, int min_k, std::vector<ThetaBlock>& cur, const std::vector<Rational>& grid,
              std::vector<TorusSpec>& out) {
    out.push_back(TorusSpec::product(n, cur));
    for (int k = min_k; used + k <= n; ++k) {
        for (const auto& s : grid) {
            cur.push_back({k, s});
            products(n, used + k, k, cur, grid, out);
            cur.pop_back();
        }
    }
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("area spectrum") {
    CHECK(area_spectrum_contains(q(3, 4), q(1, 4)));
    CHECK_FALSE(area_spectrum_contains(q(3, 4), q(1, 2)));
    CHECK(area_spectrum_contains(q(1, 2), q(1, 2)));
    CHECK_FALSE(area_spectrum_contains(q(1, 2), q(3, 2)));
    for (long den = 2; den <= 24; ++den) {
        for (long num = den / 2; num < den; ++num) {
            const Rational s = q(num, den);
            if (s < q(1, 2)) continue;
            CHECK(area_spectrum_contains(s, q(1, 2)) == (s == q(1, 2)));
            for (long m = -5; m <= 5; ++m) {
                const Rational a = s + (1 - 2 * s) * m;
                CHECK(area_spectrum_contains(s, a));
                CHECK(area_spectrum_contains(s, Rational(a + (1 - 2 * s))));
            }
        }
    }
}

TEST_CASE("torus spec") {
    const auto t = TorusSpec::theta(4, q(3, 4));
    CHECK(t.is_theta());
    CHECK(t.equators() == 0);
    CHECK(t.describe() == "theta(4, 3/4)");
    const auto p = TorusSpec::product(5, {{2, q(2, 3)}, {2, q(1, 2)}});
    CHECK(p.blocks.front().s == q(1, 2));  // canonical block order
    CHECK(p.equators() == 1);
    CHECK(p.describe() == "theta(2, 1/2) x theta(2, 2/3) x eq^1");
    CHECK(TorusSpec::from_json(p.to_json()) == p);
    CHECK(TorusSpec::from_json(nlohmann::json::parse(R"({"n":3,"s":"3/4"})")) == TorusSpec::theta(3, q(3, 4)));
    CHECK_THROWS_AS(TorusSpec::theta(1, q(3, 4)), DomainError);
    CHECK_THROWS_AS(TorusSpec::theta(3, q(1)), DomainError);
    CHECK_THROWS_AS(TorusSpec::product(3, {{2, q(3, 4)}, {2, q(3, 4)}}), DomainError);
    CHECK_THROWS_AS(TorusSpec::from_json(nlohmann::json::parse(R"({"n":3})")), DomainError);
}

TEST_CASE("disk counts against the potential") {
    CHECK(disk_count(TorusSpec::theta(2, q(3, 4))) == 5);
    CHECK(disk_count(TorusSpec::product(4, {{2, q(2, 3)}, {2, q(3, 4)}})) == 10);
    const std::vector<Rational> grid{q(1, 2), q(3, 4)};
    for (int n = 1; n <= 8; ++n) {
        std::vector<TorusSpec> all;
        std::vector<ThetaBlock> cur;
        products(n, 0, 2, cur, grid, all);
        for (const auto& t : all) {
            CAPTURE(t.describe());
            const long count = disk_count(t);
            long formula = 2L * n;
            for (const auto& b : t.blocks) formula += static_cast<long>(b.k - 1) * (b.k - 1);
            CHECK(count == formula);
            if (t.is_theta()) CHECK(count == 1 + n * n);
            const auto areas = areas_from_potential(t);
            long total = 0;
            for (const auto& [a, c] : areas) total += c;
            CHECK(total == count);
            const auto minimal = minimal_area_count(t);
            CHECK(areas.begin()->first == minimal.area);
            CHECK(areas.begin()->second == minimal.count);
        }
    }
}

TEST_CASE("minimal area counts") {
    const auto m = minimal_area_count(TorusSpec::theta(4, q(3, 4)));
    CHECK(m.area == q(1, 4));
    CHECK(m.count == 16);
    CHECK(minimal_area_count(TorusSpec::theta(3, q(1, 2))) == MinimalAreaCount{q(1, 2), 10});
    CHECK(minimal_area_count(TorusSpec::product(4, {{2, q(3, 4)}, {2, q(3, 4)}})) == MinimalAreaCount{q(1, 4), 8});
    CHECK(minimal_area_count(TorusSpec::product(4, {{2, q(3, 4)}})) == MinimalAreaCount{q(1, 4), 4});
    CHECK(minimal_area_count(TorusSpec::product(3, {})) == MinimalAreaCount{q(1, 2), 6});
}

TEST_CASE("distinguish") {
    const auto theta4 = TorusSpec::theta(4, q(3, 4));
    const auto pair = TorusSpec::product(4, {{2, q(3, 4)}, {2, q(3, 4)}});
    auto d = distinguish(theta4, pair);
    CHECK(d.verdict == Verdict::minimal_count);
    CHECK(d.conditional);
    CHECK(d.witness["a_minimal"]["count"] == 16);
    CHECK(d.witness["b_minimal"]["count"] == 8);
    CHECK(d.to_json()["tag"] == "conditional (Conj. toridistinct)");

    d = distinguish(theta4, TorusSpec::product(4, {{2, q(2, 3)}}));
    CHECK(d.verdict == Verdict::spectrum);
    CHECK_FALSE(d.conditional);
    CHECK(d.witness["a_contains"] == false);
    CHECK(d.witness["b_contains"] == true);
    CHECK_FALSE(d.to_json().contains("tag"));

    d = distinguish(TorusSpec::theta(2, q(2, 3)), TorusSpec::theta(2, q(2, 3)));
    CHECK(d.verdict == Verdict::not_distinguished);

    d = distinguish(TorusSpec::theta(3, q(3, 4)), TorusSpec::theta(3, q(11, 20)));
    CHECK(d.verdict == Verdict::spectrum);
    const Rational a = rational_from_json(d.witness["area"]);
    CHECK(area_spectrum_contains(q(3, 4), a) != area_spectrum_contains(q(11, 20), a));

    d = distinguish(TorusSpec::theta(4, q(1, 2)), TorusSpec::product(4, {{2, q(1, 2)}, {2, q(1, 2)}}));
    CHECK(d.verdict == Verdict::boundary_pairs);
    CHECK(d.witness["a_boundary_classes"] == 1);
    CHECK(d.witness["b_boundary_classes"] == 2);

    // same minimal-area count and disk count: nothing here separates them
    const auto x = TorusSpec::product(4, {{2, q(3, 4)}, {2, q(2, 3)}});
    const auto y = TorusSpec::product(4, {{2, q(3, 4)}, {2, q(3, 5)}});
    d = distinguish(x, y);
    CHECK(d.verdict == Verdict::not_distinguished);
    CHECK(d.citations.size() == 1);

    CHECK_THROWS_AS(distinguish(theta4, TorusSpec::theta(3, q(3, 4))), DimensionError);
}

TEST_CASE("count identity") {
    for (int n = 1; n <= 50; ++n) CHECK(1 + n * n == 2 * n + (n - 1) * (n - 1));
}

TEST_CASE("maslov class enumeration") {
    const auto classes = enumerate_maslov_classes(2, q(3, 4), 2);
    std::map<int, std::vector<Rational>> by_k;
    for (const auto& c : classes) {
        CHECK(c.cls.maslov_index() == 2 * c.cls.k);
        by_k[c.cls.k].push_back(c.area);
    }
    auto sorted = [](std::vector<Rational> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    CHECK(sorted(by_k[1]) == std::vector<Rational>{q(1, 4), q(3, 4)});
    CHECK(sorted(by_k[2]) == std::vector<Rational>{q(1, 2), q(1), q(3, 2)});
    CHECK(classes.front().cls.ki == std::vector<int>{0, 0});
    CHECK(classes.front().area == q(3, 4));

    for (const auto& c : enumerate_maslov_classes(2, q(1, 2), 6)) {
        CHECK(c.area == q(c.cls.k, 2));
    }
}

TEST_CASE("min area check") {
    CHECK(min_area_check(4, q(2, 3), 6));
    CHECK(min_area_check(2, q(3, 4), 10));
    CHECK(min_area_check(3, q(1, 2), 5));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& s : {q(2, 3), q(3, 4), q(9, 10)}) {
            for (int max_k = 1; max_k <= 8; max_k += 3) {
                // brute force on the raw inequality: every class has area >= 1 - s, equality only at k = 1
                bool ok = true;
                for (const auto& c : enumerate_maslov_classes(n, s, max_k)) {
                    int sum = 0;
                    for (int v : c.cls.ki) {
                        ok = ok && v >= 0;
                        sum += v;
                    }
                    ok = ok && sum <= c.cls.k;
                    const Rational direct = s * c.cls.k + (1 - 2 * s) * sum;
                    ok = ok && direct == c.area && direct >= 1 - s && (direct != 1 - s || c.cls.k == 1);
                }
                CHECK(ok);
                CHECK(min_area_check(n, s, max_k));
            }
        }
    }
}

TEST_CASE("report") {
    const auto r = invariants_report(TorusSpec::theta(4, q(3, 4)));
    const auto j = r.to_json();
    CHECK(j["disk_count"] == 17);
    CHECK(j["minimal_area"]["count"] == 16);
    CHECK(j["half_in_spectrum"] == false);
    CHECK(j["min_area_checks"][0]["passed"] == true);
}

}
