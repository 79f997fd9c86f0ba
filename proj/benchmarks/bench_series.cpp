#include <benchmark/benchmark.h>

#include <random>
#include <teichlab/families.hpp>

using namespace teichlab;

namespace {

LaurentSeries random_sigma(int depth) {
    std::mt19937_64 rng(depth);
    std::normal_distribution<double> g;
    std::vector<cxd> c(depth + 2);
    for (int i = 0; i <= depth; ++i) c[i] = 0.1 * cxd(g(rng), g(rng));
    c[depth + 1] = 1.0;
    return LaurentSeries(SeriesDomain::Exterior, -depth, 1, std::move(c), true);
}

}  // namespace

static void BM_SeriesMul(benchmark::State& state) {
    const auto f = random_sigma(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_SeriesMul)->Arg(32)->Arg(64)->Arg(128);

static void BM_SqrtTransform(benchmark::State& state) {
    const auto f = random_sigma(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_transform(f, cxd(0.3, 0.1)));
}
BENCHMARK(BM_SqrtTransform)->Arg(16)->Arg(64);

static void BM_KoebeRoot(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(koebe_qc(cxd(0.1, 0.05), int(state.range(0)), 64));
}
BENCHMARK(BM_KoebeRoot)->Arg(2)->Arg(5);
