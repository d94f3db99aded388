#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <numbers>

#include "vgp/vg_core.hpp"

namespace oracle {

// Closed-form VG density through the modified Bessel function of the second kind.
inline double bessel_pdf(const vgp::VGParams& p, double y, double t) {
    const double a = t * p.alpha, z = y - t * p.mu, s2 = p.sigma * p.sigma;
    const double c = std::sqrt(2.0 * s2 / p.theta + p.delta * p.delta);
    const double az = std::fabs(z);
    const double lg = std::log(2.0) + p.delta * z / s2 - a * std::log(p.theta) - 0.5 * std::log(2.0 * std::numbers::pi) -
                      std::log(p.sigma) - std::lgamma(a) + (a - 0.5) * std::log(az / c);
    return std::exp(lg) * std::cyl_bessel_k(std::fabs(a - 0.5), az * c / s2);
}

// int fn(y) f(y,t) dy, split at the peak, double-exponential quadrature on each half line.
inline double bessel_expect(const vgp::VGParams& p, double t, const std::function<double(double)>& fn) {
    boost::math::quadrature::exp_sinh<double> q;
    const double m = t * p.mu;
    auto term = [&](double y, double u) {
        if (u == 0.0 || u > 400.0) return 0.0;
        const double v = fn(y) * bessel_pdf(p, y, t);
        return std::isfinite(v) ? v : 0.0;
    };
    auto right = [&](double u) { return term(m + u, u); };
    auto left = [&](double u) { return term(m - u, u); };
    return q.integrate(right, 1e-13) + q.integrate(left, 1e-13);
}

// F(y) from the closed-form density, with the peak and y as breakpoints.
inline double bessel_cdf(const vgp::VGParams& p, double y, double t) {
    boost::math::quadrature::exp_sinh<double> es;
    boost::math::quadrature::tanh_sinh<double> ts;
    const double m = t * p.mu;
    auto f = [&](double x) {
        const double v = bessel_pdf(p, x, t);
        return std::isfinite(v) ? v : 0.0;
    };
    const double lo = std::min(y, m);
    double below = es.integrate([&](double u) { return u > 400.0 ? 0.0 : f(lo - u); }, 1e-13);
    if (y > m) below += ts.integrate(f, m, y, 1e-13);
    if (y < m) {
        const double upper = es.integrate([&](double u) { return u > 400.0 ? 0.0 : f(m + u); }, 1e-13) +
                             ts.integrate(f, y, m, 1e-13);
        return 1.0 - upper;
    }
    return below;
}

} // namespace oracle
