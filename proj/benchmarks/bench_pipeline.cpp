#include <benchmark/benchmark.h>

#include "oddcut/approx.hpp"
#include "oddcut/approxbuild.hpp"
#include "oddcut/enumerate.hpp"
#include "oddcut/oddsets.hpp"
#include "oddcut/sampler.hpp"

using namespace oddcut;

namespace {
const std::vector<LatticeSet>& family16() {
    static const std::vector<LatticeSet> sets = [] {
        EnumSpec spec;
        spec.d = 2;
        spec.n = 16;
        return enumerate_odd_cutsets(spec);
    }();
    return sets;
}
}  // namespace

static void BM_Approximate(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (const auto& s : family16()) benchmark::DoNotOptimize(approximate(s, t));
}
BENCHMARK(BM_Approximate)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BuildSeparator(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& s : family16()) benchmark::DoNotOptimize(build_separator(s));
}
BENCHMARK(BM_BuildSeparator)->Unit(benchmark::kMicrosecond);

static void BM_CoverSum(benchmark::State& state) {
    const Approximation a = approximate(family16().front(), 1);
    const LatticeSet star = a.star();
    for (auto _ : state) benchmark::DoNotOptimize(cover_sum_half(star));
}
BENCHMARK(BM_CoverSum)->Unit(benchmark::kMicrosecond);

static void BM_McmcSteps(benchmark::State& state) {
    std::uint64_t seed = 42;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_mcmc(2, 16, 2000, 0.6, seed++));
    }
}
BENCHMARK(BM_McmcSteps)->Unit(benchmark::kMillisecond);
