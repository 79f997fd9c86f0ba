#include <benchmark/benchmark.h>

#include <teichlab/families.hpp>
#include <teichlab/grunsky.hpp>

using namespace teichlab;

static void BM_GrunskyCoefficients(benchmark::State& state) {
    const auto f = sigma_from_s(koebe_qc(0.3, 1, 300));
    const int N = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(grunsky_coefficients(f, N));
}
BENCHMARK(BM_GrunskyCoefficients)->Arg(16)->Arg(32)->Arg(64)
    ->Unit(benchmark::kMillisecond);

static void BM_GrunskyNorm(benchmark::State& state) {
    const int N = int(state.range(0));
    const auto B = grunsky_coefficients(sigma_from_s(koebe_qc(0.3, 1, 300)), N);
    for (auto _ : state) benchmark::DoNotOptimize(grunsky_norm(B));
}
BENCHMARK(BM_GrunskyNorm)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
