#include "hermrc/solver.hpp"
#include "hermrc/verify.hpp"

#include <benchmark/benchmark.h>

using namespace hermrc;

static void BM_SolveCoefficients(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int v = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto bc = solve_coefficients(n, v, n + 2, n + 2);
        benchmark::DoNotOptimize(bc);
    }
    state.SetLabel("coefficients=" + std::to_string(index_tuples(n, v).size()));
}
BENCHMARK(BM_SolveCoefficients)
    ->Args({1, 8})
    ->Args({2, 4})
    ->Args({3, 3})
    ->Args({4, 2})
    ->Args({5, 2});

static void BM_AssembleBracket(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int v = static_cast<int>(state.range(1));
    const auto bc = solve_coefficients(n, v, n + 2, n + 2);
    const auto gens = q_generators(n);
    for (auto _ : state) {
        MultiPoly b = assemble_bracket(bc, gens);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_AssembleBracket)->Args({2, 3})->Args({3, 2});

static void BM_HomogeneityTrials(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto bracket = assemble_bracket(solve_coefficients(n, 2, n + 1, n + 1), q_generators(n));
    for (auto _ : state) {
        auto rep = check_homogeneity(bracket, n, 2, 10, 1);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_HomogeneityTrials)->DenseRange(1, 3);

static void BM_ExactRank(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    RationalSampler sampler(3);
    const RationalMatrix m = sampler.matrix(size, size);
    for (auto _ : state) {
        RationalMatrix copy = m;
        benchmark::DoNotOptimize(exact_rank(std::move(copy)));
    }
}
BENCHMARK(BM_ExactRank)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
