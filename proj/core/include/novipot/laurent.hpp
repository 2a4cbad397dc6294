#pragma once

#include "novipot/novikov.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace novipot {

/// Exponent vector indexed by the owning polynomial's variable list.
using Monomial = std::vector<int>;

/// Graded lexicographic order, largest first: total degree descending, then
/// lexicographic descending on the declared variable order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Values assigned to variables when evaluating.
using Assignment = std::map<std::string, NovikovElement>;

class RationalExpr;

/// Multivariate Laurent polynomial with Novikov coefficients.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, NovikovElement, MonomialOrder>;

    explicit LaurentPoly(const Lattice& lattice, std::vector<std::string> variables = {});

    static LaurentPoly constant(const Lattice& lattice, const NovikovElement& c,
                                std::vector<std::string> variables = {});
    static LaurentPoly constant(const Lattice& lattice, const Rational& c, std::vector<std::string> variables = {});
    /// The polynomial consisting of the single variable `name` (added to the list if absent).
    static LaurentPoly variable(const Lattice& lattice, const std::string& name,
                                std::vector<std::string> variables = {});
    static LaurentPoly term(const Lattice& lattice, std::vector<std::string> variables, Monomial exponents,
                            const NovikovElement& coefficient);

    const Lattice& lattice() const noexcept { return lattice_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Only the unit monomial (or nothing) occurs.
    bool is_constant() const;

    std::optional<std::size_t> variable_index(const std::string& name) const;
    /// Coefficient of the monomial (zero if absent).
    NovikovElement coefficient(const Monomial& m) const;

    /// Re-expresses the polynomial over a superset of its variables (in the given order).
    LaurentPoly with_variables(const std::vector<std::string>& variables) const;
    LaurentPoly renamed(const std::map<std::string, std::string>& names) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const NovikovElement& c) const;

    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    /// Inverse of a single-term polynomial; DomainError otherwise.
    LaurentPoly monomial_inverse() const;

    /// var * d/d(var): each monomial scaled by its exponent in var.
    LaurentPoly log_derivative(const std::string& var) const;

    NovikovElement evaluate(const Assignment& point) const;

    RationalExpr substitute(const std::map<std::string, RationalExpr>& images) const;

    /// Re-parseable text in canonical term order. Coefficient precisions are not printed.
    std::string to_string() const;

    nlohmann::json to_json() const;
    static LaurentPoly from_json(const Lattice& lattice, const nlohmann::json& j);

    /// Structural equality after aligning variable lists.
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void add_term(const Monomial& m, const NovikovElement& c);

    Lattice lattice_;
    std::vector<std::string> variables_;
    TermMap terms_;
};

/// p^n for n >= 0; negative n requires a single-term p.
LaurentPoly pow(const LaurentPoly& p, int n);

/// Union of two variable lists, keeping a's order and appending b's new names.
std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Quotient of two Laurent polynomials, kept unreduced. A single-term denominator is
/// folded into the numerator, so the denominator is either 1 or a genuine polynomial.
class RationalExpr {
public:
    explicit RationalExpr(const LaurentPoly& numerator);
    RationalExpr(const LaurentPoly& numerator, const LaurentPoly& denominator);

    const LaurentPoly& numerator() const noexcept { return numerator_; }
    const LaurentPoly& denominator() const noexcept { return denominator_; }
    const std::vector<std::string>& variables() const noexcept { return numerator_.variables(); }

    /// The numerator when the denominator is exactly 1.
    std::optional<LaurentPoly> as_laurent() const;

    RationalExpr with_variables(const std::vector<std::string>& variables) const;

    RationalExpr operator-() const;
    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
    RationalExpr inverse() const;

    /// numerator(point) / denominator(point).
    NovikovElement evaluate(const Assignment& point) const;

    /// Cross-multiplied equality: a.num * b.den == b.num * a.den mod tracked precision.
    friend bool operator==(const RationalExpr& a, const RationalExpr& b);

    std::string to_string() const;

private:
    LaurentPoly numerator_;
    LaurentPoly denominator_;
};

RationalExpr pow(const RationalExpr& r, int n);

/// Parses the polynomial text grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := primary ('^' exponent)?
///   primary := integer | 'T' | identifier | '(' expr ')' | 'E{' expr '}'
///   exponent := ['-'] integer | '{' ['-'] integer ['/' integer] '}'
/// Rational exponents are allowed only on T; E{x} is exp(x) for a constant x of positive
/// valuation; division is only by single-term polynomials. `variables` fixes the order of
/// known variables; new identifiers are appended as they appear.
LaurentPoly parse_laurent(std::string_view text, const Lattice& lattice, std::vector<std::string> variables = {});

/// Parses a variable-free expression as a Novikov element.
NovikovElement parse_scalar(std::string_view text, const Lattice& lattice);

}  // namespace novipot
