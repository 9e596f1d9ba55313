#include "cattaneo/analytic.hpp"
#include "cattaneo/laplace.hpp"
#include "cattaneo/process_sim.hpp"
#include "cattaneo/special_fn.hpp"
#include "cattaneo/stable.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace cattaneo;

namespace {

const CattaneoParams kBase{0.7, 0.4, 1.0, 0.5};

void BM_MittagLefflerSeries(benchmark::State& state) {
    const Complex z(-0.4, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(special_fn::mittag_leffler({0.4, 1.0}, z));
}
BENCHMARK(BM_MittagLefflerSeries);

void BM_MittagLefflerContour(benchmark::State& state) {
    const Complex z(-static_cast<double>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(special_fn::mittag_leffler({0.4, 1.0}, z));
}
BENCHMARK(BM_MittagLefflerContour)->Arg(5)->Arg(50)->Arg(500);

void BM_CharFn(benchmark::State& state) {
    const double xi = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(analytic::char_fn(kBase, xi, 1.0));
}
BENCHMARK(BM_CharFn)->Arg(3)->Arg(20);

void BM_TalbotInversion(benchmark::State& state) {
    const auto f = [](Complex s) { return analytic::fourier_laplace(kBase, 1.0, s); };
    for (auto _ : state) benchmark::DoNotOptimize(transforms::laplace_invert(f, 1.0));
}
BENCHMARK(BM_TalbotInversion);

void BM_SampleStable(benchmark::State& state) {
    Generator gen({1, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(sample_stable({0.7, 1.0}, gen));
}
BENCHMARK(BM_SampleStable);

void BM_SampleTempered(benchmark::State& state) {
    Generator gen({2, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(sample_tempered({0.7, 1.0, 1.0}, gen));
}
BENCHMARK(BM_SampleTempered);

void BM_SampleInverseSubordinator(benchmark::State& state) {
    Generator gen({3, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(sim::sample_inverse_subordinator(kBase, 1.0, gen));
}
BENCHMARK(BM_SampleInverseSubordinator);

void BM_Ensemble(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sim::run_ensemble(kBase, 1.0, n, RngStream{4, 0, 0}, 1));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Ensemble)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
