#include "wreath/asymptotics.hpp"
#include "wreath/channel_sim.hpp"
#include "wreath/enumeration.hpp"
#include "wreath/perm_code.hpp"

#include <benchmark/benchmark.h>

using namespace wreath;

static void BM_Decode(benchmark::State& state) {
    const CodeParams params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    std::mt19937_64 rng(1);
    const auto received = corrupt(encode(random_element(params, rng), params), FixedK{params.r()}, rng).word;
    for (auto _ : state) benchmark::DoNotOptimize(decode(received));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(params.length()));
}
BENCHMARK(BM_Decode)->ArgsProduct({{8, 16, 32, 64, 128, 256}, {8}})->ArgsProduct({{16}, {2, 8, 32, 128}});

static void BM_Encode(benchmark::State& state) {
    const CodeParams params(static_cast<int>(state.range(0)), 8);
    std::mt19937_64 rng(2);
    const auto g = random_element(params, rng);
    for (auto _ : state) benchmark::DoNotOptimize(encode(g, params));
}
BENCHMARK(BM_Encode)->RangeMultiplier(2)->Range(8, 256);

static void BM_CountGenfunc(benchmark::State& state) {
    const CodeParams params(9, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_genfunc(params));
}
BENCHMARK(BM_CountGenfunc)->RangeMultiplier(2)->Range(8, 128);

static void BM_CountPartitionFormula(benchmark::State& state) {
    const CodeParams params(9, static_cast<int>(state.range(0)));
    const int k = params.n() * params.r() / 2;
    for (auto _ : state) benchmark::DoNotOptimize(count_partition_formula(params, k));
}
BENCHMARK(BM_CountPartitionFormula)->RangeMultiplier(2)->Range(4, 32);

static void BM_SolveSaddle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_saddle(5, 2, 1.0));
}
BENCHMARK(BM_SolveSaddle);

static void BM_RunTrials(benchmark::State& state) {
    const CodeParams params(5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(run_trials(params, IID{0.1}, 1000, 7));
}
BENCHMARK(BM_RunTrials)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
