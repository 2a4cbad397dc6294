#include "novipot/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace novipot {

namespace {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Monomial product(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// Integer powers of one variable's value, computed once per exponent.
class PowerCache {
public:
    explicit PowerCache(const NovikovElement& value) : value_(value) {}

    const NovikovElement& get(int e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        NovikovElement v = e == 0   ? NovikovElement::constant(value_.lattice(), 1)
                           : e == 1 ? value_
                           : e == -1 ? novipot::inverse(value_)
                           : e > 0   ? get(e - 1) * value_
                                     : get(e + 1) * get(-1);
        return cache_.emplace(e, std::move(v)).first->second;
    }

private:
    NovikovElement value_;
    std::map<int, NovikovElement> cache_;
};

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = degree(a);
    const int db = degree(b);
    if (da != db) return da > db;
    return b < a;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& name : b) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Lattice& lattice, std::vector<std::string> variables)
    : lattice_(lattice), variables_(std::move(variables)) {
    std::vector<std::string> seen;
    for (const auto& v : variables_) {
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
            throw NameError("duplicate variable '" + v + "'");
        }
        seen.push_back(v);
    }
}

LaurentPoly LaurentPoly::constant(const Lattice& lattice, const NovikovElement& c, std::vector<std::string> variables) {
    LaurentPoly p(lattice, std::move(variables));
    p.add_term(Monomial(p.variables_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::constant(const Lattice& lattice, const Rational& c, std::vector<std::string> variables) {
    return constant(lattice, NovikovElement::constant(lattice, c), std::move(variables));
}

LaurentPoly LaurentPoly::variable(const Lattice& lattice, const std::string& name, std::vector<std::string> variables) {
    if (std::find(variables.begin(), variables.end(), name) == variables.end()) variables.push_back(name);
    LaurentPoly p(lattice, std::move(variables));
    Monomial m(p.variables_.size(), 0);
    m[*p.variable_index(name)] = 1;
    p.add_term(m, NovikovElement::constant(lattice, 1));
    return p;
}

LaurentPoly LaurentPoly::term(const Lattice& lattice, std::vector<std::string> variables, Monomial exponents,
                              const NovikovElement& coefficient) {
    LaurentPoly p(lattice, std::move(variables));
    if (exponents.size() != p.variables_.size()) {
        throw DimensionError("monomial length does not match the variable count");
    }
    p.add_term(exponents, coefficient);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const NovikovElement& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    NovikovElement sum = it->second + c;
    if (sum.is_zero()) {
        terms_.erase(it);
    } else {
        it->second = std::move(sum);
    }
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0 &&
                              std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                          [](int e) { return e == 0; }));
}

std::optional<std::size_t> LaurentPoly::variable_index(const std::string& name) const {
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables_.begin());
}

NovikovElement LaurentPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? NovikovElement::zero(lattice_) : it->second;
}

LaurentPoly LaurentPoly::with_variables(const std::vector<std::string>& variables) const {
    if (variables == variables_) return *this;
    LaurentPoly out(lattice_, variables);
    std::vector<std::size_t> position(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const auto idx = out.variable_index(variables_[i]);
        if (!idx) throw NameError("variable '" + variables_[i] + "' missing from the target variable list");
        position[i] = *idx;
    }
    for (const auto& [m, c] : terms_) {
        Monomial mapped(variables.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) mapped[position[i]] = m[i];
        out.terms_.emplace(std::move(mapped), c);
    }
    return out;
}

LaurentPoly LaurentPoly::renamed(const std::map<std::string, std::string>& names) const {
    std::vector<std::string> vars = variables_;
    for (auto& v : vars) {
        const auto it = names.find(v);
        if (it != names.end()) v = it->second;
    }
    LaurentPoly out(lattice_, vars);
    out.terms_ = terms_;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    const auto vars = merge_variables(a.variables_, b.variables_);
    LaurentPoly out = a.with_variables(vars);
    const LaurentPoly bb = b.with_variables(vars);
    for (const auto& [m, c] : bb.terms_) out.add_term(m, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    const auto vars = merge_variables(a.variables_, b.variables_);
    const LaurentPoly aa = a.with_variables(vars);
    const LaurentPoly bb = b.with_variables(vars);
    LaurentPoly out(a.lattice_, vars);
    for (const auto& [ma, ca] : aa.terms_) {
        for (const auto& [mb, cb] : bb.terms_) out.add_term(product(ma, mb), ca * cb);
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const NovikovElement& c) const {
    LaurentPoly out(lattice_, variables_);
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (terms_.size() != 1) throw DomainError("only single-term polynomials can be inverted, got " + to_string());
    const auto& [m, c] = *terms_.begin();
    Monomial neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    return term(lattice_, variables_, neg, novipot::inverse(c));
}

LaurentPoly pow(const LaurentPoly& p, int n) {
    if (n < 0) return pow(p.monomial_inverse(), -n);
    LaurentPoly result = LaurentPoly::constant(p.lattice(), 1, p.variables());
    LaurentPoly base = p;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::log_derivative(const std::string& var) const {
    const auto idx = variable_index(var);
    if (!idx) throw NameError("unknown variable '" + var + "'");
    LaurentPoly out(lattice_, variables_);
    for (const auto& [m, c] : terms_) {
        const int e = m[*idx];
        if (e != 0) out.terms_.emplace(m, c.scaled(e));
    }
    return out;
}

NovikovElement LaurentPoly::evaluate(const Assignment& point) const {
    std::vector<PowerCache> powers;
    powers.reserve(variables_.size());
    for (const auto& v : variables_) {
        const auto it = point.find(v);
        if (it == point.end()) throw NameError("no value assigned to '" + v + "'");
        powers.emplace_back(it->second);
    }
    NovikovElement sum = NovikovElement::zero(lattice_);
    for (const auto& [m, c] : terms_) {
        NovikovElement value = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) value = value * powers[i].get(m[i]);
        }
        sum = sum + value;
    }
    return sum;
}

RationalExpr LaurentPoly::substitute(const std::map<std::string, RationalExpr>& images) const {
    std::vector<std::string> target;
    std::vector<const RationalExpr*> image_of;
    for (const auto& v : variables_) {
        const auto it = images.find(v);
        if (it == images.end()) throw NameError("no image given for '" + v + "'");
        target = merge_variables(target, it->second.variables());
        image_of.push_back(&it->second);
    }
    std::vector<std::map<int, RationalExpr>> cache(variables_.size());
    auto power = [&](std::size_t i, int e) -> const RationalExpr& {
        auto it = cache[i].find(e);
        if (it != cache[i].end()) return it->second;
        return cache[i].emplace(e, pow(image_of[i]->with_variables(target), e)).first->second;
    };
    RationalExpr sum(LaurentPoly(lattice_, target));
    for (const auto& [m, c] : terms_) {
        RationalExpr value(LaurentPoly::constant(lattice_, c, target));
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) value = value * power(i, m[i]);
        }
        sum = sum + value;
    }
    return sum;
}

namespace {

std::string monomial_text(const std::vector<std::string>& vars, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const std::string mono = monomial_text(variables_, m);
        std::string coef;
        bool negative = false;
        if (c.size() == 1) {
            NovikovElement mag = c;
            if (c.leading_coefficient() < 0) {
                negative = true;
                mag = -c;
            }
            coef = mag.to_string();
            if (coef == "1" && !mono.empty()) coef.clear();
        } else {
            coef = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        out += coef;
        if (!coef.empty() && !mono.empty()) out += "*";
        out += mono;
    }
    return out;
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) terms.push_back({{"mono", m}, {"coef", c.to_json()}});
    return {{"vars", variables_}, {"terms", std::move(terms)}};
}

LaurentPoly LaurentPoly::from_json(const Lattice& lattice, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
        throw DomainError("Laurent polynomial JSON needs 'vars' and 'terms'");
    }
    LaurentPoly out(lattice, j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        auto m = t.at("mono").get<Monomial>();
        if (m.size() != out.variables_.size()) throw DimensionError("monomial length does not match 'vars'");
        out.add_term(m, NovikovElement::from_json(lattice, t.at("coef")));
    }
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.lattice_ == b.lattice_)) return false;
    if (a.variables_ == b.variables_) return a.terms_ == b.terms_;
    const auto vars = merge_variables(a.variables_, b.variables_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

// ---------------------------------------------------------------------------
// RationalExpr

RationalExpr::RationalExpr(const LaurentPoly& numerator)
    : numerator_(numerator), denominator_(LaurentPoly::constant(numerator.lattice(), 1, numerator.variables())) {}

RationalExpr::RationalExpr(const LaurentPoly& numerator, const LaurentPoly& denominator)
    : numerator_(numerator), denominator_(denominator) {
    if (denominator_.is_zero()) throw DivisionByZeroError("rational expression with zero denominator");
    const auto vars = merge_variables(numerator_.variables(), denominator_.variables());
    numerator_ = numerator_.with_variables(vars);
    denominator_ = denominator_.with_variables(vars);
    if (denominator_.is_monomial()) {
        numerator_ = numerator_ * denominator_.monomial_inverse();
        denominator_ = LaurentPoly::constant(numerator_.lattice(), 1, vars);
    }
}

std::optional<LaurentPoly> RationalExpr::as_laurent() const {
    if (denominator_ == LaurentPoly::constant(denominator_.lattice(), 1, denominator_.variables())) return numerator_;
    return std::nullopt;
}

RationalExpr RationalExpr::with_variables(const std::vector<std::string>& variables) const {
    RationalExpr out = *this;
    out.numerator_ = numerator_.with_variables(variables);
    out.denominator_ = denominator_.with_variables(variables);
    return out;
}

RationalExpr RationalExpr::operator-() const {
    RationalExpr out = *this;
    out.numerator_ = -numerator_;
    return out;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    if (a.denominator_ == b.denominator_) return RationalExpr(a.numerator_ + b.numerator_, a.denominator_);
    return RationalExpr(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                        a.denominator_ * b.denominator_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

RationalExpr RationalExpr::inverse() const {
    if (numerator_.is_zero()) throw DivisionByZeroError("inverse of a zero rational expression");
    return RationalExpr(denominator_, numerator_);
}

NovikovElement RationalExpr::evaluate(const Assignment& point) const {
    return numerator_.evaluate(point) * novipot::inverse(denominator_.evaluate(point));
}

RationalExpr pow(const RationalExpr& r, int n) {
    if (n < 0) return pow(r.inverse(), -n);
    RationalExpr result(LaurentPoly::constant(r.numerator().lattice(), 1, r.variables()));
    RationalExpr base = r;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

bool operator==(const RationalExpr& a, const RationalExpr& b) {
    return (a.numerator_ * b.denominator_ - b.numerator_ * a.denominator_).is_zero();
}

std::string RationalExpr::to_string() const {
    if (const auto p = as_laurent()) return p->to_string();
    return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

}  // namespace novipot
