#include "vgp/esscher.hpp"

#include <cmath>

#include "vgp/density.hpp"
#include "vgp/errors.hpp"
#include "vgp/solvers.hpp"

namespace vgp {

namespace {

double poly_p(const VGParams& p, double h) {
    return 1.0 - 0.5 * p.theta * p.sigma * p.sigma * h * h - p.delta * p.theta * h;
}

} // namespace

VGParams esscher_params(const VGParams& p, double h) {
    const MgfStrip s = mgf_strip(p);
    if (!(h > s.h1 && h < s.h2)) fail(ErrorKind::OutOfStrip, "Esscher parameter outside the mgf strip");
    if (h == 0.0) return p;
    VGParams q = p;
    q.delta = p.delta + h * p.sigma * p.sigma;
    q.theta = p.theta / poly_p(p, h);
    return q;
}

double g_ratio(const VGParams& p, double h) {
    const MgfStrip s = mgf_strip(p);
    if (!(h > s.h1 && h < s.h2 - 1.0)) fail(ErrorKind::OutOfDomain, "h outside (h1, h2 - 1)");
    return poly_p(p, h) / poly_p(p, h + 1.0);
}

bool solvability(const VGParams& p) {
    const MgfStrip s = mgf_strip(p);
    return s.h2 - s.h1 > 1.0;
}

EsscherMeasure measure_from_h(const VGParams& p, double r, double h) {
    const MgfStrip s = mgf_strip(p);
    if (!(h > s.h1 && h < s.h2 - 1.0)) fail(ErrorKind::OutOfDomain, "h outside (h1, h2 - 1)");
    EsscherMeasure m;
    m.h_star = h;
    m.rate = r;
    m.base = p;
    m.tilted = esscher_params(p, h);
    m.tilted_plus = esscher_params(p, h + 1.0);
    return m;
}

EsscherMeasure solve_h_star(const VGParams& p, double r) {
    if (!solvability(p)) fail(ErrorKind::NotSolvable, "mgf strip narrower than 1 (h2 - h1 <= 1)");
    const MgfStrip s = mgf_strip(p);
    const double eps = 1e-10 * (s.h2 - s.h1);
    const double lo = s.h1 + eps, hi = s.h2 - 1.0 - eps;
    const double target = std::exp((r - p.mu) / p.alpha);
    double h = solve_monotone([&](double x) { return g_ratio(p, x); }, target, lo, hi, 1e-12 * target);
    // Newton on log g, which is smoother near the poles.
    const double lt = std::log(target);
    for (int it = 0; it < 5; ++it) {
        const double P0 = poly_p(p, h), P1 = poly_p(p, h + 1.0);
        const double d0 = -p.theta * p.sigma * p.sigma * h - p.delta * p.theta;
        const double d1 = -p.theta * p.sigma * p.sigma * (h + 1.0) - p.delta * p.theta;
        const double f = std::log(P0) - std::log(P1) - lt;
        const double df = d0 / P0 - d1 / P1;
        const double next = h - f / df;
        if (!(next > lo && next < hi)) break;
        h = next;
    }
    return measure_from_h(p, r, h);
}

double martingale_check(const EsscherMeasure& m, double tau) {
    if (!(tau > 0.0)) fail(ErrorKind::HorizonError, "tau must be > 0");
    const MgfStrip s = mgf_strip(m.tilted);
    if (!(1.0 > s.h1 && 1.0 < s.h2)) fail(ErrorKind::StripError, "z = 1 outside the tilted mgf strip");
    return std::fabs(std::expm1(log_mgf(m.tilted, 1.0, tau) - m.rate * tau));
}

double martingale_check_numeric(const EsscherMeasure& m, double tau) {
    if (!(tau > 0.0)) fail(ErrorKind::HorizonError, "tau must be > 0");
    const MgfStrip s = mgf_strip(m.tilted);
    if (!(1.0 > s.h1 && 1.0 < s.h2)) fail(ErrorKind::StripError, "z = 1 outside the tilted mgf strip");
    const double e = expect_pdf(m.tilted, tau, [](double y) { return std::exp(y); }, 1.0);
    return std::fabs(std::exp(-m.rate * tau) * e - 1.0);
}

} // namespace vgp
