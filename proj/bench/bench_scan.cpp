#include <benchmark/benchmark.h>

#include "wavefront/scan.hpp"

using namespace wavefront;

namespace {

const WaveParams kRef = validate(2, 3, 2, 1);

void crossings(benchmark::State& state, Exec exec) {
    const std::vector<double> speeds = arange_inclusive(-2.0, 4.0, 6.0 / static_cast<double>(state.range(0) - 1));
    const IntegratorConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(scan_crossings(kRef, speeds, cfg, 1e-4, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(speeds.size()));
}

void return_map(benchmark::State& state, Exec exec) {
    std::vector<double> starts;
    for (std::int64_t i = 0; i < state.range(0); ++i) starts.push_back(1.05 + 0.4 * static_cast<double>(i) / state.range(0));
    const IntegratorConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(scan_return_map(kRef, 1.8, starts, cfg, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(crossings, serial, Exec::Serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(crossings, parallel, Exec::Parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(return_map, serial, Exec::Serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(return_map, parallel, Exec::Parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
