#include <benchmark/benchmark.h>

#include <teichlab/beltrami_solver.hpp>

using namespace teichlab;

static void BM_BeltramiSolve(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto mu = sample_disk_field([](cxd) { return cxd(0.1); }, 4.0, n);
    for (auto _ : state) benchmark::DoNotOptimize(solve_beltrami(mu));
}
BENCHMARK(BM_BeltramiSolve)->Arg(128)->Arg(256)->Arg(512)
    ->Unit(benchmark::kMillisecond);
