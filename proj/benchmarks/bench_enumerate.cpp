#include <benchmark/benchmark.h>

#include "oddcut/enumerate.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

using namespace oddcut;

static void BM_CountOddCutsets(benchmark::State& state) {
    EnumSpec spec;
    spec.d = 2;
    spec.n = state.range(0);
    for (auto _ : state) {
        EnumStats stats;
        auto sets = enumerate_odd_cutsets(spec, &stats);
        benchmark::DoNotOptimize(sets);
        state.counters["nodes"] = static_cast<double>(stats.nodes);
    }
}
BENCHMARK(BM_CountOddCutsets)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_CountOddCutsets3d(benchmark::State& state) {
    EnumSpec spec;
    spec.d = 3;
    spec.n = 30;
    for (auto _ : state) {
        auto sets = enumerate_odd_cutsets(spec);
        benchmark::DoNotOptimize(sets);
    }
}
BENCHMARK(BM_CountOddCutsets3d)->Unit(benchmark::kMillisecond);

static void BM_ParallelCount(benchmark::State& state) {
    EnumSpec spec;
    spec.d = 2;
    spec.n = 24;
    spec.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto sets = enumerate_odd_cutsets(spec);
        benchmark::DoNotOptimize(sets);
    }
}
BENCHMARK(BM_ParallelCount)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_Classify(benchmark::State& state) {
    EnumSpec spec;
    spec.d = 2;
    spec.n = 20;
    const auto family = enumerate_odd_cutsets(spec);
    for (auto _ : state) {
        for (const auto& s : family) benchmark::DoNotOptimize(classify(s, 1));
    }
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

static void BM_BoundaryProfile(benchmark::State& state) {
    const LatticeSet s = from_even_core(LatticeSet(2, {origin(2)}));
    for (auto _ : state) benchmark::DoNotOptimize(boundary_profile(s));
}
BENCHMARK(BM_BoundaryProfile)->Unit(benchmark::kMicrosecond);

static void BM_ConnectedSubsets(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(connected_subset_count(2, state.range(0)));
}
BENCHMARK(BM_ConnectedSubsets)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
