#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <optional>

#include "vgp/errors.hpp"
#include "vgp/esscher.hpp"
#include "vgp/pricing.hpp"
#include "vgp/solvers.hpp"

using namespace vgp;

namespace {

// Table 1 parameters on an annual clock with log returns (252 trading days, percent units).
VGParams annual() { return rescale(table1_params(), 252.0, 100.0); }

MarketContext at_moneyness(double k, double tau) { return {kPaperSpot, kPaperSpot / k, kPaperRate, tau}; }

double q_opt() {
    static const double q = calibrate_q(1.0);
    return q;
}

PricingConfig config() {
    PricingConfig cfg;
    cfg.q = q_opt();
    return cfg;
}

const EsscherMeasure& measure() {
    static const EsscherMeasure m = pricing_measure(annual(), kPaperRate, config());
    return m;
}

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

} // namespace

TEST(BlackScholes, ReferenceValues) {
    EXPECT_NEAR(black_scholes({438.98, 438.98, 0.06, 0.25}, 0.1848).price, 19.53, 0.01);
    EXPECT_NEAR(black_scholes({438.98, 219.49, 0.06, 0.0625}, 0.1848).price, 220.31, 0.01);
    // ATM time value vanishes like S vol sqrt(tau / 2 pi).
    const double c6 = black_scholes({438.98, 438.98, 0.06, 1e-6}, 0.1848).price;
    EXPECT_NEAR(c6, 438.98 * 0.1848 * 1e-3 / std::sqrt(2 * std::numbers::pi), 1e-4);
    EXPECT_LT(black_scholes({438.98, 438.98, 0.06, 1e-8}, 0.1848).price, 0.01);
}

TEST(BlackScholes, PutCallParityAndBounds) {
    for (double k : {0.6, 1.0, 1.4}) {
        const MarketContext m = at_moneyness(k, 0.5);
        const double c = black_scholes(m, 0.25).price;
        const double d1 = (std::log(m.spot / m.strike) + (m.rate + 0.5 * 0.0625) * m.tau) / (0.25 * std::sqrt(m.tau));
        const double put = m.strike * std::exp(-m.rate * m.tau) * std_normal_cdf(-(d1 - 0.25 * std::sqrt(m.tau))) -
                           m.spot * std_normal_cdf(-d1);
        EXPECT_NEAR(c - put, m.spot - m.strike * std::exp(-m.rate * m.tau), 1e-9);
    }
    EXPECT_EQ(kind_of([] { black_scholes({438.98, 438.98, 0.06, 0.25}, 0.0); }), ErrorKind::InputError);
}

TEST(MarketContext, Validation) {
    EXPECT_THROW((MarketContext{-1.0, 1.0, 0.0, 1.0}).validate(), Error);
    EXPECT_THROW((MarketContext{1.0, 1.0, 0.0, 0.0}).validate(), Error);
    EXPECT_DOUBLE_EQ((MarketContext{2.0, 1.0, 0.0, 1.0}).moneyness(), 2.0);
}

TEST(PayoffTransform, Closed) {
    const cplx y{3.0, -1.5};
    const cplx iy = cplx(0, 1) * y;
    EXPECT_LT(std::abs(payoff_transform(1.0, y) - 1.0 / (iy * (iy - 1.0))), 1e-15);
    const double r = std::abs(payoff_transform(1.3, cplx(1e3, -1.5))) / std::abs(payoff_transform(1.3, cplx(2e3, -1.5)));
    EXPECT_NEAR(r, 4.0, 0.2);
    EXPECT_EQ(kind_of([] { payoff_transform(1.0, cplx(1.0, -1.0)); }), ErrorKind::StripError);
}

TEST(PayoffTransform, MatchesDirectIntegral) {
    // int (e^x - k)^+ e^{-iyx} dx along Im y = q, by quadrature on [log k, 40].
    const double k = 1.2, q = -1.7, xi = 0.8;
    const cplx y{xi, q};
    const double lk = std::log(k);
    cplx s{};
    const int n = 400000;
    const double h = (40.0 - lk) / n;
    for (int j = 0; j <= n; ++j) {
        const double x = lk + j * h;
        const double w = (j == 0 || j == n) ? 0.5 : 1.0;
        s += w * (std::exp(x) - k) * std::exp(cplx(0, -1) * y * x);
    }
    EXPECT_LT(std::abs(s * h - payoff_transform(k, y)), 1e-6);
}

TEST(PayoffRecover, Values) {
    auto v = payoff_recover(1.0, -1.5, {0.3});
    EXPECT_NEAR(v[0], std::exp(0.3) - 1.0, 1e-3);
    const double k = 1.25, lk = std::log(k);
    auto w = payoff_recover(k, -1.0086, {lk - 2.0, lk + 1.0});
    EXPECT_LT(std::fabs(w[0]), 1e-3);
    EXPECT_NEAR(w[1], k * (std::numbers::e - 1.0), 2e-3 * k);
    EXPECT_EQ(kind_of([] { payoff_recover(1.0, -0.5, {0.0}); }), ErrorKind::StripError);
}

TEST(ErObjective, Properties) {
    EXPECT_GT(er_objective(1.0, -2.0), er_objective(1.0, -1.0086));
    double prev = 1e300;
    for (std::size_t n : {std::size_t{1} << 12, std::size_t{1} << 13, std::size_t{1} << 14}) {
        const double e = er_objective(1.0, -1.2, 1.0, 101, PayoffGrid{n, 0.005});
        EXPECT_LT(e, prev) << n;
        prev = e;
    }
    EXPECT_EQ(kind_of([] { er_objective(1.0, -1.5, 1.0, 1); }), ErrorKind::GridError);
}

TEST(ErObjective, NoInteriorMaximum) {
    std::vector<double> v;
    for (int i = 0; i < 200; ++i) v.push_back(er_objective(1.0, -3.0 + (3.0 - 1.001) * i / 199.0));
    for (std::size_t i = 1; i + 1 < v.size(); ++i) EXPECT_FALSE(v[i] > v[i - 1] && v[i] > v[i + 1]) << i;
}

TEST(CalibrateQ, ReferenceValue) {
    const double q = q_opt();
    EXPECT_NEAR(q, -1.0086, 0.02);
    EXPECT_LT(q, -1.0);
    // Grid-search oracle.
    double best = 0.0, be = 1e300;
    for (int i = 0; i <= 200; ++i) {
        const double x = -1.05 + 0.0489 * i / 200.0;
        const double e = er_objective(1.0, x);
        if (e < be) be = e, best = x;
    }
    EXPECT_NEAR(q, best, 1e-3);
    for (double k : {0.8, 1.25}) {
        const double qk = calibrate_q(k);
        EXPECT_NEAR(qk, q, 0.05) << k;
        EXPECT_LT(qk, -1.0);
    }
}

TEST(Extended, ReferenceExamples) {
    EXPECT_NEAR(price_extended(measure(), at_moneyness(2.0, 0.0625), config()).price, 220.31, 0.5);
    EXPECT_LT(price_extended(measure(), at_moneyness(0.5, 0.0625), config()).price, 0.01);
    const MarketContext tiny{kPaperSpot, 1e-4, kPaperRate, 0.25};
    EXPECT_NEAR(price_extended(measure(), tiny, config()).price, kPaperSpot, 1e-6 * kPaperSpot);
}

TEST(Extended, FourierRouteAgrees) {
    auto cfg = config();
    cfg.cdf_route = CdfRoute::fourier;
    for (double k : {0.9, 1.0, 1.1}) {
        const auto m = at_moneyness(k, 0.25);
        EXPECT_NEAR(price_extended(measure(), m, cfg).price, price_extended(measure(), m, config()).price, 1e-6 * m.strike);
    }
}

TEST(Extended, ParamsOverloadSolvesMeasure) {
    const auto m = at_moneyness(1.0, 0.5);
    const auto a = price_extended(annual(), m, config());
    EXPECT_EQ(a.price, price_extended(measure(), m, config()).price);
    EXPECT_NEAR(a.diagnostics.h_star, measure().h_star, 1e-15);
}

TEST(Generalized, CrossEngine) {
    for (double tau : {0.25, 0.5, 1.0}) {
        for (double k : {0.95, 1.0, 1.05}) {
            const auto m = at_moneyness(k, tau);
            const auto g = price_generalized(measure(), m, config());
            const auto e = price_extended(measure(), m, config());
            EXPECT_LE(std::fabs(g.price - e.price), 0.01 * m.strike) << k << " " << tau;
            EXPECT_LT(g.diagnostics.imag_residue, 1e-6 * m.strike);
        }
    }
}

TEST(Generalized, DeepOtmAndMaturityMonotone) {
    EXPECT_LE(price_generalized(measure(), at_moneyness(0.5, 0.25), config()).price, 0.005);
    double prev = 0.0;
    for (double tau : paper_taus()) {
        const double v = price_generalized(measure(), at_moneyness(1.0, tau), config()).price;
        EXPECT_GT(v, prev) << tau;
        prev = v;
    }
}

TEST(Generalized, DampingIndependence) {
    auto a = config(), b = config();
    b.q = a.q - 0.2;
    for (double k : {0.9, 1.0, 1.2}) {
        const auto m = at_moneyness(k, 0.5);
        EXPECT_LT(std::fabs(price_generalized(measure(), m, a).price - price_generalized(measure(), m, b).price),
                  1e-4 * m.strike);
    }
}

TEST(Generalized, StripAndGridErrors) {
    auto cfg = config();
    cfg.q = -0.9;
    EXPECT_EQ(kind_of([&] { price_generalized(measure(), at_moneyness(1.0, 0.25), cfg); }), ErrorKind::StripError);
    cfg.q = measure().tilted.theta > 0 ? -1e3 : 0.0;
    EXPECT_EQ(kind_of([&] { price_generalized(measure(), at_moneyness(1.0, 0.25), cfg); }), ErrorKind::StripError);
}

TEST(Generalized, FixedGridOverload) {
    const auto m = at_moneyness(1.0, 0.5);
    const auto ad = price_generalized(measure(), m, config());
    const auto fx = price_generalized(measure(), m, ad.diagnostics.grid);
    EXPECT_NEAR(fx.price, ad.price, 1e-9 * m.strike);
}

TEST(Generalized, StripMatchesSingleQuotes) {
    const std::vector<double> strikes = {400.0, 438.98, 480.0};
    auto strip = price_generalized_strip(measure(), kPaperSpot, kPaperRate, 0.5, strikes, config());
    ASSERT_EQ(strip.size(), strikes.size());
    for (std::size_t i = 0; i < strikes.size(); ++i) {
        const MarketContext m{kPaperSpot, strikes[i], kPaperRate, 0.5};
        EXPECT_NEAR(strip[i].price, price_generalized(measure(), m, config()).price, 1e-5 * strikes[i]);
    }
}

TEST(Surface, ShapeOrderingAndNoArbitrage) {
    const auto strikes = paper_strikes();
    const auto taus = paper_taus();
    auto s = price_surface(annual(), kPaperRate, kPaperSpot, strikes, taus, Engine::generalized, config());
    ASSERT_EQ(s.size(), 186u);
    for (std::size_t i = 0; i < strikes.size(); ++i) {
        for (std::size_t j = 0; j < taus.size(); ++j) {
            const auto& c = s[i * taus.size() + j];
            EXPECT_EQ(c.strike, strikes[i]);
            EXPECT_EQ(c.tau, taus[j]);
            const double lo = std::max(0.0, kPaperSpot - c.strike * std::exp(-kPaperRate * c.tau));
            EXPECT_GE(c.quote.price, lo - 1e-6 * kPaperSpot);
            EXPECT_LE(c.quote.price, kPaperSpot + 1e-6 * kPaperSpot);
        }
    }
    // Nonincreasing and convex in K along each maturity (strikes are not equally spaced).
    for (std::size_t j = 0; j < taus.size(); ++j) {
        for (std::size_t i = 1; i < strikes.size(); ++i) {
            EXPECT_LE(s[i * 6 + j].quote.price, s[(i - 1) * 6 + j].quote.price + 1e-9);
        }
        for (std::size_t i = 1; i + 1 < strikes.size(); ++i) {
            const double k0 = strikes[i - 1], k1 = strikes[i], k2 = strikes[i + 1];
            const double c0 = s[(i - 1) * 6 + j].quote.price, c1 = s[i * 6 + j].quote.price, c2 = s[(i + 1) * 6 + j].quote.price;
            const double interp = c0 + (c2 - c0) * (k1 - k0) / (k2 - k0);
            EXPECT_LE(c1, interp + 1e-6 * kPaperSpot);
        }
    }
}

TEST(Surface, ExtendedNoArbitrage) {
    const std::vector<double> taus = {0.25};
    auto s = price_surface(annual(), kPaperRate, kPaperSpot, paper_strikes(), taus, Engine::extended, config());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& c = s[i];
        EXPECT_GE(c.quote.price, std::max(0.0, kPaperSpot - c.strike * std::exp(-kPaperRate * c.tau)) - 1e-6 * kPaperSpot);
        EXPECT_LE(c.quote.price, kPaperSpot * (1 + 1e-6));
        if (i) EXPECT_LE(c.quote.price, s[i - 1].quote.price + 1e-9);
    }
}

TEST(ErrorSurface, DeepCellsContinuityAndOtmSign) {
    const auto taus = paper_taus();
    auto e = error_surface(annual(), kPaperRate, kPaperSpot, paper_strikes(), taus, kPaperVol, config(),
                           Engine::generalized);
    ASSERT_EQ(e.size(), 186u);
    auto at = [&](std::size_t i, std::size_t j) { return e[i * taus.size() + j]; };
    // Row 0 is k = 2.00, row 30 is k = 0.50.
    EXPECT_LT(std::fabs(at(0, 0).error), 5e-3);
    EXPECT_LT(std::fabs(at(30, 0).error), 5e-3);
    for (std::size_t i = 0; i < 31; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            if (i + 1 < 31) EXPECT_LT(std::fabs(at(i + 1, j).error - at(i, j).error), 0.05);
            if (j + 1 < 6) EXPECT_LT(std::fabs(at(i, j + 1).error - at(i, j).error), 0.05);
        }
    }
    for (std::size_t i = 0; i < 31; ++i) {
        const double k = at(i, 2).k;
        if (k >= 0.80 - 1e-9 && k <= 0.95 + 1e-9) EXPECT_LT(at(i, 2).error, 0.0) << k;
    }
}

TEST(Limit, NearNormalFamilyApproachesBlackScholes) {
    // Scale alpha by c and theta by 1/c with delta fixed; adjust sigma so (a, b) stay fixed.
    const auto p = annual();
    const double c = 256.0;
    const auto n0 = asymptotic_normal_params(p);
    VGParams q = p;
    q.alpha = p.alpha * c;
    q.theta = p.theta / c;
    const double b2 = n0.b * n0.b;
    q.sigma = std::sqrt((b2 - q.alpha * q.theta * q.theta * q.delta * q.delta) / (q.alpha * q.theta));
    const auto n1 = asymptotic_normal_params(q);
    ASSERT_NEAR(n1.a, n0.a, 1e-12);
    ASSERT_NEAR(n1.b, n0.b, 1e-12);
    auto cfg = config();
    const auto m = pricing_measure(q, kPaperRate, cfg);
    for (double tau : {0.25, 1.0}) {
        const auto mk = at_moneyness(1.0, tau);
        const double vg = price_extended(m, mk, cfg).price;
        EXPECT_NEAR(vg, black_scholes(mk, n0.b).price, 5e-3 * mk.strike) << tau;
    }
}

TEST(ReplicationGrid, Layout) {
    const auto k = paper_moneyness();
    ASSERT_EQ(k.size(), 31u);
    EXPECT_DOUBLE_EQ(k.front(), 2.0);
    EXPECT_DOUBLE_EQ(k.back(), 0.5);
    EXPECT_EQ(paper_taus().size(), 6u);
    EXPECT_NEAR(paper_strikes().front(), 219.49, 1e-9);
}
