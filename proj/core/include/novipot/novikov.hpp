#pragma once

/// Truncated Novikov-ring arithmetic.
///
/// An element is a finite sum  sum_i a_i T^{l_i}  with exact rational coefficients and
/// exponents on a fixed lattice (1/D)Z, known modulo T^precision. All operations are
/// pure; elements are immutable values.

#include "novipot/errors.hpp"
#include "novipot/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace novipot {

/// Exponent grid (1/D)Z together with the global truncation cutoff and the precision floor.
class Lattice {
public:
    static inline const Rational default_cutoff{10};
    static inline const Rational default_floor{2};

    explicit Lattice(std::int64_t denominator = 2, const Rational& cutoff = default_cutoff,
                     const Rational& floor = default_floor);

    /// Smallest lattice containing 1/2, 1, the cutoff, the floor, and every parameter.
    static Lattice for_parameters(const std::vector<Rational>& parameters,
                                  const Rational& cutoff = default_cutoff,
                                  const Rational& floor = default_floor);

    std::int64_t denominator() const noexcept { return denominator_; }
    std::int64_t cutoff_steps() const noexcept { return cutoff_steps_; }
    std::int64_t floor_steps() const noexcept { return floor_steps_; }
    Rational cutoff() const { return exponent(cutoff_steps_); }
    Rational floor() const { return exponent(floor_steps_); }

    bool contains(const Rational& exponent) const;
    /// exponent * D; throws LatticeError when exponent is off the lattice.
    std::int64_t steps(const Rational& exponent) const;
    Rational exponent(std::int64_t steps) const;

    /// Same grid and cutoff, different floor.
    Lattice with_floor(const Rational& floor) const;
    Lattice with_cutoff(const Rational& cutoff) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    std::int64_t denominator_;
    std::int64_t cutoff_steps_;
    std::int64_t floor_steps_;
};

/// Valuation of a Novikov element: a rational, or +infinity for zero.
class Valuation {
public:
    static Valuation infinite() { return Valuation(); }
    Valuation(const Rational& value) : finite_(true), value_(value) {}  // NOLINT: implicit by design of the API

    bool is_infinite() const noexcept { return !finite_; }
    const Rational& value() const;

    friend bool operator==(const Valuation& a, const Valuation& b);
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    Valuation() = default;
    bool finite_ = false;
    Rational value_;
};

class NovikovElement {
public:
    struct Term {
        Rational exponent;
        Rational coefficient;
    };

    /// Normalizes: merges equal exponents, drops zero coefficients and terms at or beyond
    /// the precision. Throws LatticeError for off-lattice exponents.
    static NovikovElement make(const Lattice& lattice, const std::vector<Term>& terms,
                               const Rational& precision);
    static NovikovElement make(const Lattice& lattice, const std::vector<Term>& terms);

    static NovikovElement zero(const Lattice& lattice);
    static NovikovElement constant(const Lattice& lattice, const Rational& c);
    /// c * T^exponent, exact to the cutoff.
    static NovikovElement monomial(const Lattice& lattice, const Rational& c, const Rational& exponent);

    const Lattice& lattice() const noexcept { return lattice_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool is_zero() const noexcept { return steps_.empty(); }

    std::vector<Term> terms() const;
    Rational exponent(std::size_t i) const { return lattice_.exponent(steps_[i]); }
    Rational coefficient(std::size_t i) const;
    std::int64_t exponent_steps(std::size_t i) const { return steps_[i]; }

    Rational precision() const { return lattice_.exponent(precision_); }
    std::int64_t precision_steps() const noexcept { return precision_; }

    Valuation valuation() const;
    /// Coefficient of the lowest term; zero for the zero element.
    Rational leading_coefficient() const;

    /// Coefficient at the given exponent (zero if absent).
    Rational coefficient_at(const Rational& exponent) const;

    /// The element known only modulo T^p (p clamped to the current precision).
    NovikovElement truncated(const Rational& p) const;

    NovikovElement operator-() const;
    friend NovikovElement operator+(const NovikovElement& a, const NovikovElement& b);
    friend NovikovElement operator-(const NovikovElement& a, const NovikovElement& b);
    friend NovikovElement operator*(const NovikovElement& a, const NovikovElement& b);
    NovikovElement scaled(const Rational& c) const;

    NovikovElement& operator+=(const NovikovElement& b) { return *this = *this + b; }
    NovikovElement& operator-=(const NovikovElement& b) { return *this = *this - b; }
    NovikovElement& operator*=(const NovikovElement& b) { return *this = *this * b; }

    /// Structural equality: same lattice, terms and precision.
    friend bool operator==(const NovikovElement& a, const NovikovElement& b);

    std::string to_string() const;
    /// to_string() followed by " + O(T^p)".
    std::string describe() const;

    nlohmann::json to_json() const;
    static NovikovElement from_json(const Lattice& lattice, const nlohmann::json& j);

private:
    NovikovElement(const Lattice& lattice, std::int64_t precision)
        : lattice_(lattice), denominator_(1), precision_(precision) {}

    static NovikovElement from_dense(const Lattice& lattice, std::int64_t base,
                                     const std::vector<Rational>& coefficients, std::int64_t precision);
    std::vector<Rational> dense_unit_part(std::int64_t relative_precision) const;
    std::int64_t effective_valuation_steps() const;
    void normalize();
    void require_floor(const char* op) const;

    friend NovikovElement inverse(const NovikovElement& a);
    friend NovikovElement exp(const NovikovElement& a);
    friend NovikovElement sqrt(const NovikovElement& a);

    Lattice lattice_;
    std::vector<std::int64_t> steps_;  // strictly increasing
    std::vector<Integer> numerators_;  // nonzero, parallel to steps_
    Integer denominator_;              // > 0, coprime to the numerators jointly
    std::int64_t precision_;           // in lattice steps
};

/// b with a*b = 1 modulo T^(prec(a) - 2 val(a)).
NovikovElement inverse(const NovikovElement& a);
/// sum_j a^j / j!  for val(a) > 0.
NovikovElement exp(const NovikovElement& a);
/// Square root with positive leading coefficient, by order-by-order lifting.
NovikovElement sqrt(const NovikovElement& a);
/// Integer power; negative powers go through inverse().
NovikovElement pow(const NovikovElement& a, std::int64_t n);

/// a == b modulo the smaller of the two precisions.
bool congruent(const NovikovElement& a, const NovikovElement& b);

}  // namespace novipot
