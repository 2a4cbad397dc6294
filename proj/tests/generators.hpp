#pragma once

// Hand-rolled random generators for the property suites. Seeds are fixed so every
// run exercises the same cases.

#include "novipot/novikov.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace novipot::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return integer(0, 1) == 1; }

    Rational small_rational(std::int64_t bound = 9) {
        std::int64_t num = integer(-bound, bound);
        const std::int64_t den = integer(1, bound);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(std::int64_t bound = 9) {
        for (;;) {
            Rational q = small_rational(bound);
            if (q != 0) return q;
        }
    }

    /// Element with exponents in [min_step, max_step] lattice steps and the given precision (in steps).
    NovikovElement element(const Lattice& lattice, std::int64_t min_step, std::int64_t max_step,
                           std::int64_t precision_steps, int max_terms = 4) {
        std::vector<NovikovElement::Term> terms;
        const int count = static_cast<int>(integer(0, max_terms));
        for (int i = 0; i < count; ++i) {
            terms.push_back({lattice.exponent(integer(min_step, max_step)), small_rational()});
        }
        return NovikovElement::make(lattice, terms, lattice.exponent(precision_steps));
    }

    /// Element of Lambda_0 with a nonzero constant term (a unit).
    NovikovElement unit(const Lattice& lattice, std::int64_t max_step, std::int64_t precision_steps) {
        NovikovElement x = element(lattice, 1, max_step, precision_steps, 3);
        return x + NovikovElement::constant(lattice, nonzero_rational()).truncated(lattice.exponent(precision_steps));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace novipot::testing
