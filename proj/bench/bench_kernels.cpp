// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "bridgecover/minkus.hpp"
#include "bridgecover/report.hpp"
#include "bridgecover/snf.hpp"
#include "bridgecover/verify.hpp"

using namespace bridgecover;

namespace {

// Face-to-edge boundary of a triangulated cover, n(p-1) tetrahedra.
IntegerMatrix boundary_of(int p, int q, int n) {
    return induced_complex(triangulate(build_scheme(SlopePair(p, q), n, 1))).boundary[1];
}

void BM_SweepSerial(benchmark::State& state) {
    const auto cases = sweep_cases(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(cases));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto cases = sweep_cases(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(cases));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}

void BM_SnfSerial(benchmark::State& state) {
    const auto mat = boundary_of(static_cast<int>(state.range(0)), 3, 6);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(mat));
}

void BM_SnfParallel(benchmark::State& state) {
    const auto mat = boundary_of(static_cast<int>(state.range(0)), 3, 6);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form_parallel(mat));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnfSerial)->Arg(11)->Arg(23)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnfParallel)->Arg(11)->Arg(23)->Arg(41)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
