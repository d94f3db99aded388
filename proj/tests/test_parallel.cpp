#include <gtest/gtest.h>

#include <omp.h>

#include <cmath>

#include "vgp/density.hpp"
#include "vgp/pricing.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/simulate.hpp"

using namespace vgp;

namespace {

template <class F>
auto with_threads(int n, F&& f) {
    const int old = omp_get_max_threads();
    omp_set_num_threads(n);
    auto r = f();
    omp_set_num_threads(old);
    return r;
}

} // namespace

TEST(Parallel, CompositeIntegrateBitIdentical) {
    const auto rule = make_rule(0.0, 20.0, 5000);
    auto f = [](double x) { return std::exp(-x) * std::cos(3 * x) + 1e-3 * x; };
    const double s = composite_integrate(f, rule, Exec::serial);
    for (int t : {1, 2, 4, 7}) {
        EXPECT_EQ(with_threads(t, [&] { return composite_integrate(f, rule, Exec::parallel); }), s) << t;
    }
}

TEST(Parallel, MixtureGridBitIdentical) {
    const auto p = table1_params();
    const auto ys = uniform_grid(-4.0, 4.0, 97);
    const auto s = pdf_mixture_grid(p, ys, 0.5, {}, Exec::serial);
    const auto c = cdf_mixture_grid(p, ys, 0.5, {}, Exec::serial);
    for (int t : {2, 5}) {
        EXPECT_EQ(with_threads(t, [&] { return pdf_mixture_grid(p, ys, 0.5, {}, Exec::parallel); }), s);
        EXPECT_EQ(with_threads(t, [&] { return cdf_mixture_grid(p, ys, 0.5, {}, Exec::parallel); }), c);
    }
}

TEST(Parallel, PriceSurfaceBitIdentical) {
    const auto p = rescale(table1_params(), 252.0, 100.0);
    PricingConfig cfg;
    cfg.q = -1.0127;
    const std::vector<double> strikes = {380.0, 438.98, 500.0};
    const std::vector<double> taus = {0.25, 1.0};
    for (Engine e : {Engine::extended, Engine::generalized, Engine::black_scholes}) {
        const auto s = price_surface(p, kPaperRate, kPaperSpot, strikes, taus, e, cfg, kPaperVol, Exec::serial);
        const auto q = with_threads(4, [&] {
            return price_surface(p, kPaperRate, kPaperSpot, strikes, taus, e, cfg, kPaperVol, Exec::parallel);
        });
        ASSERT_EQ(s.size(), q.size());
        for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].quote.price, q[i].quote.price) << engine_name(e) << i;
    }
}

TEST(Parallel, SimulationIndependentOfThreadCount) {
    const auto p = table1_params();
    auto cfg = OUConfig::from(p, 1.0, 1.0, 1.0);
    cfg.stationary_start = true;
    const auto a = with_threads(1, [&] { return vg_path_increments(p, cfg, 2000, 5); });
    const auto b = with_threads(6, [&] { return vg_path_increments(p, cfg, 2000, 5); });
    EXPECT_EQ(a, b);
    const auto c = with_threads(1, [&] { return sample_vg(p, 1.0, 5000, 6); });
    const auto d = with_threads(3, [&] { return sample_vg(p, 1.0, 5000, 6); });
    EXPECT_EQ(c, d);
    const auto e = with_threads(1, [&] { return ou_transition_samples(OUConfig{}, 1.0, 3000, 7); });
    const auto f = with_threads(4, [&] { return ou_transition_samples(OUConfig{}, 1.0, 3000, 7); });
    EXPECT_EQ(e, f);
}

TEST(Parallel, ExpectationIndependentOfThreadCount) {
    auto f = [] { return expect_pdf(table1_params(), 1.0, [](double y) { return y * y; }); };
    EXPECT_EQ(with_threads(1, f), with_threads(4, f));
}
