#include "hermrc/generators.hpp"
#include "hermrc/operators.hpp"

#include <benchmark/benchmark.h>

using namespace hermrc;

static void BM_GeneratorConstruction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto gens = q_generators(n);
        benchmark::DoNotOptimize(gens);
    }
}
BENCHMARK(BM_GeneratorConstruction)->DenseRange(2, 5);

static void BM_GeneratorProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QGeneratorSet gens = q_generators(n);
    for (auto _ : state) {
        MultiPoly p = gens.q(1) * gens.q(n - 1);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_GeneratorProduct)->DenseRange(2, 4);

static void BM_Association(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QGeneratorSet gens = q_generators(n);
    const MultiPoly q = gens.q(1);
    for (auto _ : state) {
        MultiPoly p = associated_polynomial(q, n, n, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_Association)->DenseRange(2, 3);

static void BM_LaplaceTotal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QGeneratorSet gens = q_generators(n);
    const MultiPoly q = gens.q(0) * gens.q(n);
    const OperatorContext ctx{n, n + 1, n + 2};
    for (auto _ : state) {
        MultiPoly p = laplace_total(q, ctx);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_LaplaceTotal)->DenseRange(2, 4);
