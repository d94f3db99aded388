#include <benchmark/benchmark.h>

#include <omp.h>

#include <cmath>

#include "vgp/density.hpp"
#include "vgp/pricing.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/simulate.hpp"

using namespace vgp;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_CompositeIntegrate(benchmark::State& s) {
    const auto rule = make_rule(0.0, 20.0, 50000);
    for (auto _ : s)
        benchmark::DoNotOptimize(composite_integrate([](double x) { return std::exp(-x) * std::cos(x); }, rule, mode(s)));
}

void BM_PdfMixtureGrid(benchmark::State& s) {
    const auto p = table1_params();
    const auto ys = uniform_grid(-8.0, 8.0, 201);
    for (auto _ : s) benchmark::DoNotOptimize(pdf_mixture_grid(p, ys, 0.5, {}, mode(s)));
}

void BM_PriceSurfaceExtended(benchmark::State& s) {
    const auto p = rescale(table1_params(), 252.0, 100.0);
    PricingConfig cfg;
    cfg.q = -1.012668;
    const auto strikes = paper_strikes();
    const std::vector<double> taus{0.25, 1.0};
    for (auto _ : s)
        benchmark::DoNotOptimize(
            price_surface(p, kPaperRate, kPaperSpot, strikes, taus, Engine::extended, cfg, kPaperVol, mode(s)));
}

void BM_PriceSurfaceGeneralized(benchmark::State& s) {
    const auto p = rescale(table1_params(), 252.0, 100.0);
    PricingConfig cfg;
    cfg.q = -1.012668;
    const auto strikes = paper_strikes();
    const std::vector<double> taus{0.25, 1.0};
    for (auto _ : s)
        benchmark::DoNotOptimize(
            price_surface(p, kPaperRate, kPaperSpot, strikes, taus, Engine::generalized, cfg, kPaperVol, mode(s)));
}

// Simulation kernels parallelize internally; serial runs pin one thread.
void BM_VgPathIncrements(benchmark::State& s) {
    const auto p = table1_params();
    auto cfg = OUConfig::from(p, 1.0, 1.0, 1e-3);
    cfg.stationary_start = true;
    const int old = omp_get_max_threads();
    omp_set_num_threads(s.range(0) ? old : 1);
    for (auto _ : s) benchmark::DoNotOptimize(vg_path_increments(p, cfg, 20000, 7));
    omp_set_num_threads(old);
}

} // namespace

BENCHMARK(BM_CompositeIntegrate)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_PdfMixtureGrid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PriceSurfaceExtended)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PriceSurfaceGeneralized)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VgPathIncrements)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
