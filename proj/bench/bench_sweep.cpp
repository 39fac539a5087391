// Serial reference vs OpenMP kernels for the per-dimension sweeps.

#include <benchmark/benchmark.h>

#include "simplexcert/sweep.hpp"

using namespace simplexcert;

namespace {

Execution mode_of(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void BM_InductionSweep(benchmark::State& state)
{
    const auto n_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(induction_sweep(n_max, mode_of(state)));
}

void BM_Hypotheses(benchmark::State& state)
{
    const auto hi = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_hypotheses(1, hi, mode_of(state)));
}

void BM_WellBuiltRatios(benchmark::State& state)
{
    const auto hi = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(well_built_ratios(1, hi, mode_of(state)));
}

} // namespace

BENCHMARK(BM_InductionSweep)->ArgsProduct({{16, 32, 64}, {0, 1}})->ArgNames({"n_max", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hypotheses)->ArgsProduct({{16, 32}, {0, 1}})->ArgNames({"n_max", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WellBuiltRatios)->ArgsProduct({{32, 64, 128}, {0, 1}})->ArgNames({"n_max", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
