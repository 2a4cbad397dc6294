#include "novipot/critical.hpp"

#include <benchmark/benchmark.h>

using namespace novipot;

namespace {

std::vector<int> weights(int n) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i) k.push_back((i % 5) - 2);
    return k;
}

void BM_SolveTheta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Rational rho(1, 6);
    const auto l = Lattice::for_parameters({rho}, 6, 1);
    const auto k = weights(n);
    for (auto _ : state) benchmark::DoNotOptimize(solve_theta(l, n, k, rho, verify_floor_for(l)));
}
BENCHMARK(BM_SolveTheta)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_CliffordQH(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Rational rho(1, 4);
    const auto l = Lattice::for_parameters({rho}, 6, 1);
    const auto k = weights(n);
    for (auto _ : state) benchmark::DoNotOptimize(clifford_qh(l, n, k, rho, verify_floor_for(l)));
}
BENCHMARK(BM_CliffordQH)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    k[0] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(certify(n, Rational(2, 3), k));
}
BENCHMARK(BM_Certify)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
