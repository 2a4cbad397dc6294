#pragma once

// Randomized property suites shared by the unit tests and the acceptance run. Each
// returns the number of violated cases.

#include "generators.hpp"

#include <algorithm>

namespace novipot::testing {

inline int ring_axioms(std::uint64_t seed, int cases) {
    const Lattice l(4, 10, 0);
    Gen g(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
        const auto a = g.element(l, 0, 12, g.integer(8, 40));
        const auto b = g.element(l, 0, 12, g.integer(8, 40));
        const auto d = g.element(l, 0, 12, g.integer(8, 40));
        const bool ok = congruent((a + b) + d, a + (b + d)) && congruent(a + b, b + a) &&
                        congruent((a * b) * d, a * (b * d)) && congruent(a * b, b * a) &&
                        congruent(a * (b + d), a * b + a * d) && (a - a).is_zero() &&
                        NovikovElement::make(l, a.terms(), a.precision()) == a;
        bad += ok ? 0 : 1;
    }
    return bad;
}

inline int ultrametric_laws(std::uint64_t seed, int cases) {
    const Lattice l(4, 10, 0);
    Gen g(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
        const auto a = g.element(l, 0, 12, 40);
        const auto b = g.element(l, 0, 12, 40);
        bool ok = true;
        if (!a.is_zero() && !b.is_zero()) {
            ok = ok && (a * b).valuation() == Valuation(a.valuation().value() + b.valuation().value());
        }
        const auto s = a + b;
        const auto least = std::min(a.valuation(), b.valuation());
        ok = ok && s.valuation() >= least;
        if (a.valuation() != b.valuation()) ok = ok && s.valuation() == least;
        bad += ok ? 0 : 1;
    }
    return bad;
}

inline int inverse_round_trips(std::uint64_t seed, int cases) {
    const Lattice l(4, 10, 2);
    Gen g(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
        auto a = g.unit(l, 12, 40);
        if (g.coin()) a = a * NovikovElement::monomial(l, 1, l.exponent(g.integer(1, 6)));
        const auto prod = a * inverse(a);
        const bool ok = prod.precision() >= a.precision() - 2 * a.valuation().value() &&
                        congruent(prod, NovikovElement::constant(l, 1));
        bad += ok ? 0 : 1;
    }
    return bad;
}

inline int exp_round_trips(std::uint64_t seed, int cases) {
    const Lattice l(4, 10, 0);
    Gen g(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
        const auto a = g.element(l, 1, 12, 40, 3);
        const auto b = g.element(l, 1, 12, 40, 3);
        const bool ok = congruent(exp(a) * exp(-a), NovikovElement::constant(l, 1)) &&
                        congruent(exp(a + b), exp(a) * exp(b));
        bad += ok ? 0 : 1;
    }
    return bad;
}

inline int sqrt_round_trips(std::uint64_t seed, int cases) {
    const Lattice l(4, 10, 0);
    Gen g(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
        // a square of a random element has a square leading coefficient and even valuation
        auto x = g.unit(l, 12, 40);
        if (g.coin()) x = x * NovikovElement::monomial(l, 1, l.exponent(g.integer(1, 4)));
        const auto a = x * x;
        const auto r = sqrt(a);
        const bool ok = r.leading_coefficient() > 0 && congruent(r * r, a) && (congruent(r, x) || congruent(r, -x));
        bad += ok ? 0 : 1;
    }
    return bad;
}

/// Products of long operands against the same product split into short pieces.
inline int long_products(std::uint64_t seed, int cases) {
    const Lattice l(6, 10, 0);
    Gen g(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
        const auto a = g.element(l, 0, 40, 60, 30);
        const auto b = g.element(l, 0, 40, 60, 30);
        std::vector<NovikovElement::Term> low;
        std::vector<NovikovElement::Term> high;
        for (const auto& t : a.terms()) (low.size() < 5 ? low : high).push_back(t);
        const auto a1 = NovikovElement::make(l, low, a.precision());
        const auto a2 = NovikovElement::make(l, high, a.precision());
        // split again so every partial product has a short factor
        NovikovElement split = a1 * b;
        for (const auto& t : a2.terms()) split += NovikovElement::make(l, {t}, a.precision()) * b;
        bad += congruent(a * b, split) ? 0 : 1;
    }
    return bad;
}

}  // namespace novipot::testing
