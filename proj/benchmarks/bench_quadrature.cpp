#include <benchmark/benchmark.h>

#include <teichlab/quadrature.hpp>

using namespace teichlab;

static void BM_L1NormRho(benchmark::State& state) {
    const auto rho = rho_element(cxd(2.0, 0.0));
    QuadratureOptions opt;
    opt.tol = std::pow(10.0, -double(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(l1_norm_report(rho, opt));
}
BENCHMARK(BM_L1NormRho)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_PairingTeich(benchmark::State& state) {
    const auto rho = rho_element(cxd(2.0, 0.0));
    const auto mu = teich_beltrami(rho, 0.3);
    QuadratureOptions opt;
    opt.tol = 1e-8;
    for (auto _ : state) benchmark::DoNotOptimize(pairing_report(mu, rho, opt));
}
BENCHMARK(BM_PairingTeich)->Unit(benchmark::kMillisecond);
