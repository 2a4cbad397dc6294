#include "novipot/potentials.hpp"

#include <array>
#include <utility>

namespace novipot {

namespace {

constexpr std::array<std::pair<Family, const char*>, 6> kFamilyNames{{
    {Family::clifford, "clifford"},
    {Family::theta, "theta"},
    {Family::theta_bulk, "theta_bulk"},
    {Family::blowup, "blowup"},
    {Family::blowup_bulk, "blowup_bulk"},
    {Family::custom, "custom"},
}};

bool uses_theta(Family f) { return f == Family::theta || f == Family::theta_bulk; }
bool uses_blowup(Family f) { return f == Family::blowup || f == Family::blowup_bulk; }

LaurentPoly var(const Lattice& L, const std::vector<std::string>& vars, const std::string& name) {
    return LaurentPoly::variable(L, name, vars);
}

LaurentPoly scalar(const Lattice& L, const NovikovElement& c, const std::vector<std::string>& vars) {
    return LaurentPoly::constant(L, c, vars);
}

NovikovElement t_power(const Lattice& L, const Rational& e) { return NovikovElement::monomial(L, 1, e); }

/// e^{k T^rho}
NovikovElement bulk_factor(const Lattice& L, int k, const Rational& rho) {
    if (k == 0) return NovikovElement::constant(L, 1);
    return exp(NovikovElement::monomial(L, k, rho));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

std::string to_string(Family f) {
    for (const auto& [tag, name] : kFamilyNames) {
        if (tag == f) return name;
    }
    throw DomainError("unknown family");
}

Family family_from_string(const std::string& name) {
    for (const auto& [tag, text] : kFamilyNames) {
        if (name == text) return tag;
    }
    throw DomainError("unknown family '" + name + "'");
}

void PotentialSpec::validate() const {
    require(n >= 1, "n must be at least 1");
    if (uses_theta(family)) require(n >= 2, "theta families need n >= 2");
    if (uses_blowup(family)) require(n == 2, "blowup families have n = 2");
    require(s >= Rational(1, 2) && s < 1, "s must lie in [1/2, 1)");
    require(rho > 0, "rho must be positive");
    require(eps > 0 && eps < 1, "eps must lie in (0, 1)");
    require(bulk.empty() || static_cast<int>(bulk.size()) == n,
            "bulk weights must have length n (" + std::to_string(n) + ")");
    if (family == Family::custom) require(!expr.empty(), "custom family needs an expression");
}

std::vector<int> PotentialSpec::bulk_weights() const {
    std::vector<int> k = bulk;
    k.resize(static_cast<std::size_t>(std::max(n, 0)), 0);
    return k;
}

Lattice PotentialSpec::lattice(const Rational& cutoff, const Rational& floor) const {
    return Lattice::for_parameters({s, rho, eps}, cutoff, floor);
}

nlohmann::json PotentialSpec::to_json() const {
    nlohmann::json j{
        {"family", novipot::to_string(family)},
        {"n", n},
        {"s", rational_to_json(s)},
        {"rho", rational_to_json(rho)},
        {"bulk", bulk},
        {"eps", rational_to_json(eps)},
    };
    if (family == Family::custom) j["expr"] = expr;
    return j;
}

PotentialSpec PotentialSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("potential spec must be a JSON object");
    PotentialSpec spec;
    try {
        if (j.contains("family")) spec.family = family_from_string(j.at("family").get<std::string>());
        if (j.contains("n")) spec.n = j.at("n").get<int>();
        if (j.contains("s")) spec.s = rational_from_json(j.at("s"));
        if (j.contains("rho")) spec.rho = rational_from_json(j.at("rho"));
        if (j.contains("bulk")) spec.bulk = j.at("bulk").get<std::vector<int>>();
        if (j.contains("eps")) spec.eps = rational_from_json(j.at("eps"));
        if (j.contains("expr")) spec.expr = j.at("expr").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed potential spec: ") + e.what());
    }
    if (uses_blowup(spec.family) && !j.contains("n")) spec.n = 2;
    spec.validate();
    return spec;
}

std::vector<std::string> clifford_variables(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

std::vector<std::string> theta_variables(int n) {
    std::vector<std::string> v{"u"};
    for (int i = 1; i < n; ++i) v.push_back("w" + std::to_string(i));
    return v;
}

std::vector<std::string> blowup_variables() { return {"u", "w"}; }

LaurentPoly clifford(const Lattice& L, int n, const std::vector<int>& l, const Rational& rho) {
    const auto vars = clifford_variables(n);
    LaurentPoly p(L, vars);
    for (int i = 0; i < n; ++i) {
        const int li = i < static_cast<int>(l.size()) ? l[i] : 0;
        const auto z = var(L, vars, vars[i]);
        p += z;
        p += z.monomial_inverse().scaled(t_power(L, 1) * bulk_factor(L, li, rho));
    }
    return p;
}

LaurentPoly theta(const Lattice& L, int n) { return theta_bulk(L, n, {}, 1); }

LaurentPoly theta_bulk(const Lattice& L, int n, const std::vector<int>& k, const Rational& rho) {
    if (n < 2) throw DomainError("theta potentials need n >= 2");
    const auto vars = theta_variables(n);
    auto weight = [&](int i) { return i < static_cast<int>(k.size()) ? k[i] : 0; };
    const auto one = LaurentPoly::constant(L, 1, vars);
    LaurentPoly forward = one;
    LaurentPoly backward = one;
    for (int i = 1; i < n; ++i) {
        const auto w = var(L, vars, vars[i]);
        forward += w;
        backward += w.monomial_inverse().scaled(bulk_factor(L, weight(i - 1), rho));
    }
    const auto u = var(L, vars, "u");
    const auto t_over_u = u.monomial_inverse().scaled(t_power(L, 1) * bulk_factor(L, weight(n - 1), rho));
    return u + t_over_u * forward * backward;
}

LaurentPoly blowup(const Lattice& L, const Rational& eps) {
    const auto vars = blowup_variables();
    const auto u = var(L, vars, "u");
    const auto w = var(L, vars, "w");
    const auto one = LaurentPoly::constant(L, 1, vars);
    const auto t_over_u = u.monomial_inverse().scaled(t_power(L, 1));
    return u + t_over_u * (one + w) * (one + w.monomial_inverse()) +
           (w + w.monomial_inverse()).scaled(t_power(L, 1 - eps));
}

LaurentPoly blowup_bulk(const Lattice& L, const Rational& eps, const Rational& rho) {
    const auto vars = blowup_variables();
    const auto u = var(L, vars, "u");
    const auto w = var(L, vars, "w");
    const auto e = bulk_factor(L, 1, rho);
    const auto one = LaurentPoly::constant(L, 1, vars);
    const auto t_over_u = u.monomial_inverse().scaled(t_power(L, 1));
    return u + t_over_u * (one + w) * (scalar(L, e, vars) + w.monomial_inverse()) +
           (w.scaled(e) + w.monomial_inverse()).scaled(t_power(L, 1 - eps));
}

LaurentPoly toric_blowup(const Lattice& L, const Rational& eps) {
    const std::vector<std::string> vars{"u1", "u2"};
    const auto a = var(L, vars, "u1");
    const auto b = var(L, vars, "u2");
    const auto t = t_power(L, 1);
    return a + b + a.monomial_inverse().scaled(t) + b.monomial_inverse().scaled(t) +
           (a * b.monomial_inverse() + b * a.monomial_inverse()).scaled(t_power(L, 1 - eps));
}

LaurentPoly equator(const Lattice& L, const std::string& name) {
    const auto z = LaurentPoly::variable(L, name);
    return z + z.monomial_inverse().scaled(t_power(L, 1));
}

Substitution wall_crossing_theta(const Lattice& L, int n) {
    if (n < 2) throw DomainError("wall crossing needs n >= 2");
    const auto vars = theta_variables(n);
    const auto u = var(L, vars, "u");
    LaurentPoly sum = LaurentPoly::constant(L, 1, vars);
    for (int i = 1; i < n; ++i) sum += var(L, vars, vars[i]);
    Substitution sigma;
    for (int i = 1; i < n; ++i) {
        sigma.emplace("z" + std::to_string(i), RationalExpr(var(L, vars, vars[i]) * u, sum));
    }
    sigma.emplace("z" + std::to_string(n), RationalExpr(u, sum));
    return sigma;
}

Substitution wall_crossing_blowup(const Lattice& L) {
    const auto vars = blowup_variables();
    const auto u = var(L, vars, "u");
    const auto w = var(L, vars, "w");
    const auto sum = LaurentPoly::constant(L, 1, vars) + w;
    return {{"u1", RationalExpr(u, sum)}, {"u2", RationalExpr(w * u, sum)}};
}

LaurentPoly product_potential(const Lattice& L, const std::vector<ProductBlock>& blocks, int equators) {
    LaurentPoly total(L);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const int k = blocks[b].k;
        const std::string tag = std::to_string(b + 1);
        std::map<std::string, std::string> names{{"u", "u_" + tag}};
        for (int i = 1; i < k; ++i) names.emplace("w" + std::to_string(i), "w_" + tag + "_" + std::to_string(i));
        total += theta(L, k).renamed(names);
    }
    for (int e = 1; e <= equators; ++e) total += equator(L, "e_" + std::to_string(e));
    return total;
}

Rational maslov_two_count(const LaurentPoly& p) {
    Rational total = 0;
    for (const auto& [mono, coef] : p.terms()) {
        for (const auto& t : coef.terms()) total += t.coefficient;
    }
    return total;
}

LaurentPoly build(const PotentialSpec& spec, const Lattice& L) {
    spec.validate();
    const auto k = spec.bulk_weights();
    switch (spec.family) {
        case Family::clifford:
            return clifford(L, spec.n, k, spec.rho);
        case Family::theta:
            return theta(L, spec.n);
        case Family::theta_bulk:
            return theta_bulk(L, spec.n, k, spec.rho);
        case Family::blowup:
            return blowup(L, spec.eps);
        case Family::blowup_bulk:
            return blowup_bulk(L, spec.eps, spec.rho);
        case Family::custom:
            return parse_laurent(spec.expr, L);
    }
    throw DomainError("unknown family");
}

}  // namespace novipot
