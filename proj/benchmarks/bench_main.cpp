#include <benchmark/benchmark.h>

#include <random>

#include "kmarkov/contfrac.hpp"
#include "kmarkov/lattice.hpp"
#include "kmarkov/markov.hpp"
#include "kmarkov/poset.hpp"

using namespace kmarkov;

static void BM_CfNumerator(benchmark::State& state) {
    CFSequence s(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(1);
    for (auto& x : s) x = static_cast<unsigned long>(1 + rng() % 9);
    for (auto _ : state) benchmark::DoNotOptimize(cf_numerator(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CfNumerator)->RangeMultiplier(4)->Range(8, 8192)->Complexity();

static FencePoset bench_poset(std::size_t h) {
    std::mt19937_64 rng(2);
    return random_fence_poset(rng, h);
}

static void BM_IdealCountDp(benchmark::State& state) {
    FencePoset p = bench_poset(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ideal_count(p));
}
BENCHMARK(BM_IdealCountDp)->DenseRange(8, 20, 4)->Arg(200)->Arg(2000);

static void BM_IdealCountEnumeration(benchmark::State& state) {
    FencePoset p = bench_poset(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ideals_enumerate_count(p));
}
BENCHMARK(BM_IdealCountEnumeration)->DenseRange(8, 20, 4);

static void BM_WeightedSum(benchmark::State& state) {
    const long q = state.range(0);
    CrossingWord w = crossing_word_segment({0, 0}, {q, q - 1}, Side::Left);
    FencePoset p = poset_from_word(w, 2);
    for (auto _ : state) benchmark::DoNotOptimize(weighted_ideal_sum(p));
}
BENCHMARK(BM_WeightedSum)->Arg(8)->Arg(32)->Arg(128);

static void BM_MarkovNumberTree(benchmark::State& state) {
    const long q = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(markov_number(1, Fraction{(q - 1) / 2, q}));
}
BENCHMARK(BM_MarkovNumberTree)->Arg(9)->Arg(31)->Arg(101);

static void BM_MarkovNumberPoset(benchmark::State& state) {
    const long q = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(markov_number(1, Fraction{(q - 1) / 2, q}, Method::Poset));
}
BENCHMARK(BM_MarkovNumberPoset)->Arg(9)->Arg(31)->Arg(101);

static void BM_PtolemySweep(benchmark::State& state) {
    const long hi = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_ptolemy_sweep(0, 0, hi, 1).quadrilaterals);
}
BENCHMARK(BM_PtolemySweep)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Aigner(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_aigner(1, static_cast<std::size_t>(state.range(0)), 1).passed());
}
BENCHMARK(BM_Aigner)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
