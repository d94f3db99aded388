#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "vgp/density.hpp"
#include "vgp/errors.hpp"
#include "vgp/esscher.hpp"

using namespace vgp;

namespace {

double P(const VGParams& p, double h) {
    return 1.0 - 0.5 * p.theta * p.sigma * p.sigma * h * h - p.delta * p.theta * h;
}

} // namespace

TEST(GRatio, ValueAtZero) {
    const auto p = table1_params();
    EXPECT_NEAR(g_ratio(p, 0.0), 1.0 / P(p, 1.0), 1e-14);
    EXPECT_NEAR(g_ratio(p, 0.0), 1.79494, 1e-4);
}

TEST(GRatio, Monotone) {
    const auto p = table1_params();
    const auto s = mgf_strip(p);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(s.h1 + 1e-9, s.h2 - 1.0 - 1e-9);
    for (int i = 0; i < 100; ++i) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        if (a == b) continue;
        EXPECT_GT(g_ratio(p, b), g_ratio(p, a));
    }
}

TEST(GRatio, PolesAndDomain) {
    const auto p = table1_params();
    const auto s = mgf_strip(p);
    EXPECT_GT(g_ratio(p, s.h2 - 1.0 - 1e-8), 1e6);
    EXPECT_LT(g_ratio(p, s.h1 + 1e-8), 1e-6);
    for (double h : {s.h2 - 1.0, s.h1, 5.0}) {
        try {
            g_ratio(p, h);
            FAIL() << h;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::OutOfDomain);
        }
    }
}

TEST(Solvability, Cases) {
    const auto p = table1_params();
    EXPECT_TRUE(solvability(p));
    const auto s = mgf_strip(p);
    EXPECT_NEAR(s.h2 - s.h1, 2.839, 1e-3);
    auto q = p;
    q.sigma = 50.0;
    EXPECT_FALSE(solvability(q));
    VGParams b{0.0, 0.0, 1.0, 1.0, 7.9};
    EXPECT_TRUE(solvability(b));
    b.theta = 8.1;
    EXPECT_FALSE(solvability(b));
}

TEST(HStar, Table1) {
    const auto p = table1_params();
    const auto m = solve_h_star(p, 0.06);
    EXPECT_NEAR(m.h_star, -0.4700, 5e-4);
    EXPECT_NEAR(g_ratio(p, m.h_star), std::exp((0.06 - p.mu) / p.alpha), 1e-10);
    const auto s = mgf_strip(p);
    EXPECT_GT(m.h_star, s.h1);
    EXPECT_LT(m.h_star, s.h2 - 1.0);
}

TEST(HStar, BisectionOracle) {
    const auto p = table1_params();
    const auto s = mgf_strip(p);
    const double target = std::exp((0.06 - p.mu) / p.alpha);
    double lo = s.h1 + 1e-12, hi = s.h2 - 1.0 - 1e-12;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (P(p, mid) / P(p, mid + 1.0) < target ? lo : hi) = mid;
    }
    EXPECT_NEAR(solve_h_star(p, 0.06).h_star, 0.5 * (lo + hi), 1e-11);
}

TEST(HStar, UnitTargetFixedPoint) {
    auto p = table1_params();
    p.delta = 0.0;
    EXPECT_NEAR(solve_h_star(p, p.mu).h_star, -0.5, 1e-12);
    // In general g(h) = 1 at h = -1/2 - delta/sigma^2, where M(h) = M(h+1).
    auto q = table1_params();
    q.mu = 0.0;
    const double h = solve_h_star(q, 0.0).h_star;
    EXPECT_NEAR(h, -0.5 - q.delta / (q.sigma * q.sigma), 1e-12);
    EXPECT_NEAR(mgf(q, h, 1.0), mgf(q, h + 1.0, 1.0), 1e-12);
}

TEST(HStar, RoundTripRandom) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        VGParams p{-0.1 + 0.2 * u(rng), -0.3 + 0.6 * u(rng), 0.3 + u(rng), 0.3 + 2 * u(rng), 0.2 + u(rng)};
        if (!solvability(p)) continue;
        const double r = 0.1 * u(rng);
        const auto m = solve_h_star(p, r);
        EXPECT_NEAR(g_ratio(p, m.h_star) / std::exp((r - p.mu) / p.alpha), 1.0, 1e-10);
    }
}

TEST(HStar, NotSolvable) {
    auto p = table1_params();
    p.sigma = 50.0;
    try {
        solve_h_star(p, 0.06);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSolvable);
    }
}

TEST(Measure, TiltedParameterRelations) {
    const auto p = table1_params();
    const double r = 0.06;
    const auto m = solve_h_star(p, r);
    const double s2 = p.sigma * p.sigma;
    EXPECT_NEAR(m.tilted.delta, p.delta + m.h_star * s2, 1e-15);
    EXPECT_NEAR(m.tilted.theta, p.theta / P(p, m.h_star), 1e-14);
    EXPECT_GT(m.tilted.theta, 0.0);
    EXPECT_NEAR(m.tilted_plus.delta, m.tilted.delta + s2, 1e-14);
    EXPECT_NEAR(m.tilted_plus.theta / m.tilted.theta, std::exp((r - p.mu) / p.alpha), 1e-12);
    EXPECT_EQ(m.tilted.mu, p.mu);
    EXPECT_EQ(m.tilted.sigma, p.sigma);
    EXPECT_EQ(m.tilted.alpha, p.alpha);
}

TEST(Measure, IdentityAtZero) {
    const auto p = table1_params();
    const auto q = esscher_params(p, 0.0);
    EXPECT_EQ(q.mu, p.mu);
    EXPECT_EQ(q.delta, p.delta);
    EXPECT_EQ(q.sigma, p.sigma);
    EXPECT_EQ(q.alpha, p.alpha);
    EXPECT_EQ(q.theta, p.theta);
}

TEST(Measure, TheoremEquality) {
    const auto p = table1_params();
    const auto s = mgf_strip(p);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double h = s.h1 + (s.h2 - s.h1) * (0.05 + 0.9 * u(rng));
        const double z = (s.h1 - h) + (s.h2 - s.h1) * (0.05 + 0.9 * u(rng));
        const auto q = esscher_params(p, h);
        const double lhs = mgf(q, z, 1.0), rhs = mgf(p, h + z, 1.0) / mgf(p, h, 1.0);
        EXPECT_NEAR(lhs / rhs, 1.0, 1e-10) << h << " " << z;
    }
}

TEST(Measure, OutOfStrip) {
    try {
        esscher_params(table1_params(), 1.6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OutOfStrip);
    }
}

TEST(Martingale, Analytic) {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        VGParams p{-0.1 + 0.2 * u(rng), -0.3 + 0.6 * u(rng), 0.3 + u(rng), 0.3 + 2 * u(rng), 0.2 + u(rng)};
        if (!solvability(p)) continue;
        const auto m = solve_h_star(p, 0.06);
        for (double tau : {0.25, 1.0}) EXPECT_LT(martingale_check(m, tau), 1e-12);
        ++checked;
    }
    EXPECT_GT(checked, 20);
    EXPECT_LT(martingale_check(solve_h_star(table1_params(), 0.06), 0.25), 1e-12);
}

TEST(Martingale, Numeric) {
    const auto m = solve_h_star(table1_params(), 0.06);
    EXPECT_LT(martingale_check_numeric(m, 0.25), 1e-4);
    EXPECT_LT(martingale_check_numeric(m, 1.0), 1e-4);
}

TEST(Martingale, WrongHDiscriminates) {
    const auto p = table1_params();
    const auto m = solve_h_star(p, 0.06);
    const auto w = measure_from_h(p, 0.06, m.h_star + 0.1);
    EXPECT_GT(martingale_check(w, 1.0), 1e-3);
    EXPECT_GT(martingale_check_numeric(w, 1.0), 1e-3);
}

TEST(Martingale, Errors) {
    const auto m = solve_h_star(table1_params(), 0.06);
    EXPECT_THROW(martingale_check(m, 0.0), Error);
    EXPECT_THROW(measure_from_h(table1_params(), 0.06, 0.6), Error);
}

TEST(RadonNikodym, Normalization) {
    const auto p = table1_params();
    const auto m = solve_h_star(p, 0.06);
    for (double tau : {0.25, 1.0}) {
        const double h = m.h_star;
        const double e = expect_pdf(p, tau, [&](double y) { return std::exp(h * y); }, h);
        EXPECT_NEAR(e / mgf(p, h, tau), 1.0, 1e-6);
    }
}
