#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "divbound/divbound.hpp"

namespace {

using namespace divbound;

void BM_DivergenceKL(benchmark::State& state) {
    const MeasurePair p = random_pair(static_cast<std::size_t>(state.range(0)), 1);
    const Generator f = builtin("KL");
    for (auto _ : state) benchmark::DoNotOptimize(d_f(f, p.mu, p.nu));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DivergenceKL)->RangeMultiplier(8)->Range(2, 4096);

void BM_TvDistance(benchmark::State& state) {
    const MeasurePair p = random_pair(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(tv_distance(p.mu, p.nu));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TvDistance)->RangeMultiplier(8)->Range(2, 4096);

void BM_Invert(benchmark::State& state) {
    const Generator f = builtin(builtin_names()[static_cast<std::size_t>(state.range(0))]);
    state.SetLabel(f.name());
    for (auto _ : state) benchmark::DoNotOptimize(invert(f, ExtendedReal{0.1}));
}
BENCHMARK(BM_Invert)->DenseRange(0, 4);

void BM_InvertCustomGenerator(benchmark::State& state) {
    // Non-builtin generators pay for the monotonicity screen on every call.
    const Generator f = dual(builtin("PE"));
    for (auto _ : state) benchmark::DoNotOptimize(invert(f, ExtendedReal{0.1}));
}
BENCHMARK(BM_InvertCustomGenerator);

void BM_HahnJordan(benchmark::State& state) {
    const MeasurePair p = random_pair(static_cast<std::size_t>(state.range(0)), 3);
    const SignedMeasure nu = difference(p.mu, p.nu);
    for (auto _ : state) benchmark::DoNotOptimize(hahn_jordan(nu));
}
BENCHMARK(BM_HahnJordan)->RangeMultiplier(8)->Range(2, 4096);

void BM_VerifyBound(benchmark::State& state) {
    const Generator f = builtin("HE");
    for (auto _ : state) benchmark::DoNotOptimize(verify_bound(f, 1000, 8, 7));
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_VerifyBound)->Unit(benchmark::kMillisecond);

void BM_TightnessGap(benchmark::State& state) {
    const Generator f = builtin("KL");
    for (auto _ : state) benchmark::DoNotOptimize(tightness_gap(f, 0.1, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TightnessGap)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
