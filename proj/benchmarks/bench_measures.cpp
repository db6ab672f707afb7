#include <monolab/measures.hpp>
#include <monolab/monogamy.hpp>
#include <monolab/reports.hpp>
#include <monolab/superactivation.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace monolab;

static void BM_NegativityFullRoute(benchmark::State& state) {
    const PureState w3 = build_wclass(WClassParams::uniform(3, 2));
    const ComplexMatrix rho = density(w3);
    for (auto _ : state) {
        auto v = negativity(rho, w3.dims(), IndexSubset{0}, Convention::doubled);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_NegativityFullRoute);

static void BM_BruteForceCopyFullPath(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const PureState w3 = build_wclass(WClassParams::uniform(3, 2));
    for (auto _ : state) {
        auto v = brute_force_copy_negativity(w3, IndexSubset{0, 1}, m);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_BruteForceCopyFullPath)->Arg(1)->Arg(2);

static void BM_CriticalPower(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::vector<CorrelationProfile> profiles;
    for (int i = 0; i < 256; ++i) profiles.emplace_back(1.0, std::vector<double>{u(rng), u(rng)});
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = critical_power(profiles[i++ & 255]);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CriticalPower);

static void BM_FSurfaceGrid(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = f_surface_rows(12, 20);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_FSurfaceGrid);
