#include "novipot/novikov.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace novipot;

namespace {

// Dense element with `terms` consecutive lattice steps starting at `first`.
NovikovElement dense(const Lattice& l, std::int64_t first, int terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    std::vector<NovikovElement::Term> t;
    for (int i = 0; i < terms; ++i) t.push_back({l.exponent(first + i), Rational(num(rng), den(rng))});
    if (first == 0) t.push_back({Rational(0), Rational(1)});
    return NovikovElement::make(l, t);
}

void BM_Multiply(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    const Lattice l(terms / 6, 10, 0);
    const auto a = dense(l, 0, terms, 1);
    const auto b = dense(l, 0, terms, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(terms);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(6, 192)->Complexity();

void BM_Inverse(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    const Lattice l(terms / 6, 10, 0);
    const auto a = dense(l, 0, terms, 3);
    for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_Inverse)->RangeMultiplier(2)->Range(6, 96);

void BM_Exp(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    const Lattice l(terms / 6, 10, 0);
    const auto a = dense(l, 1, terms, 4);
    for (auto _ : state) benchmark::DoNotOptimize(exp(a));
}
BENCHMARK(BM_Exp)->RangeMultiplier(2)->Range(6, 96);

void BM_Sqrt(benchmark::State& state) {
    const Lattice l(12, 10, 0);
    const auto x = dense(l, 0, 60, 5);
    const auto a = x * x;
    for (auto _ : state) benchmark::DoNotOptimize(sqrt(a));
}
BENCHMARK(BM_Sqrt);

}  // namespace

BENCHMARK_MAIN();
