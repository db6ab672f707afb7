#include <monolab/states.hpp>
#include <monolab/tensor.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace monolab;

namespace {

ComplexMatrix make_hermitian(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = u(rng);
        for (std::size_t c = r + 1; c < n; ++c) {
            h(r, c) = cplx{u(rng), u(rng)};
            h(c, r) = std::conj(h(r, c));
        }
    }
    return h;
}

} // namespace

static void BM_Kron(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = make_hermitian(n, 1);
    const ComplexMatrix b = make_hermitian(n, 2);
    for (auto _ : state) {
        auto out = kron(a, b);
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Kron)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_PartialTranspose(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix h = make_hermitian(side * side, 3);
    const PartyDims dims{side, side};
    for (auto _ : state) {
        auto out = partial_transpose(h, dims, IndexSubset{0});
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_PartialTranspose)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_PartialTrace(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix h = make_hermitian(side * side, 4);
    const PartyDims dims{side, side};
    for (auto _ : state) {
        auto out = partial_trace(h, dims, IndexSubset{0});
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_HermitianEigenvalues(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix h = make_hermitian(n, 5);
    for (auto _ : state) {
        auto eig = hermitian_eigenvalues(h);
        benchmark::DoNotOptimize(eig);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermitianEigenvalues)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_SqrtTraceCopies(benchmark::State& state) {
    // the fig1 oracle inner loop: spectrum of rho_A^{tensor m}
    const int m = static_cast<int>(state.range(0));
    const PureState w3 = build_wclass(WClassParams::uniform(3, 2));
    const ComplexMatrix rho = reduced(w3, IndexSubset{0});
    for (auto _ : state) {
        auto v = sqrt_trace(kron_power(rho, static_cast<std::size_t>(m)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SqrtTraceCopies)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
