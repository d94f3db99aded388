#include "vgp/vg_core.hpp"

#include <cmath>
#include <numbers>

#include "vgp/errors.hpp"

namespace vgp {

void VGParams::validate() const {
    if (!std::isfinite(mu) || !std::isfinite(delta))
        fail(ErrorKind::InvalidParams, "mu and delta must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) fail(ErrorKind::InvalidParams, "sigma must be > 0");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(ErrorKind::InvalidParams, "alpha must be > 0");
    if (!(theta > 0.0) || !std::isfinite(theta)) fail(ErrorKind::InvalidParams, "theta must be > 0");
}

VGParams table1_params() { return {0.0848, -0.0577, 1.0295, 0.8845, 0.9378}; }

VGParams rescale(const VGParams& p, double periods, double scale) {
    if (!(periods > 0.0) || !(scale > 0.0))
        fail(ErrorKind::InvalidParams, "periods and scale must be positive");
    return {periods * p.mu / scale, p.delta, p.sigma / std::sqrt(scale), periods * p.alpha,
            p.theta / scale};
}

namespace {

double strip_root(const VGParams& p) {
    const double s2 = p.sigma * p.sigma;
    return std::sqrt(p.delta * p.delta / (s2 * s2) + 2.0 / (p.theta * s2));
}

} // namespace

MgfStrip mgf_strip(const VGParams& p) {
    p.validate();
    const double c = -p.delta / (p.sigma * p.sigma), r = strip_root(p);
    return {c - r, c + r};
}

SteepnessPair steepness(const VGParams& p) {
    p.validate();
    const double c = p.delta / (p.sigma * p.sigma), r = strip_root(p);
    return {c + r, c - r};
}

cplx char_fn(const VGParams& p, double xi, double t) {
    if (!(t >= 0.0)) fail(ErrorKind::HorizonError, "t must be >= 0");
    const cplx w{1.0 + 0.5 * p.sigma * p.sigma * p.theta * xi * xi, -p.delta * p.theta * xi};
    return std::exp(cplx{0.0, t * p.mu * xi} - t * p.alpha * std::log(w));
}

cplx char_exponent(const VGParams& p, cplx z) {
    const cplx i{0.0, 1.0};
    const SteepnessPair s = steepness(p);
    if (z.imag() > s.x2 && z.imag() < s.x1) {
        // Both factors have positive real part inside the strip, so the log is continuous.
        const cplx f1 = 1.0 + i * z / s.x1, f2 = 1.0 + i * z / s.x2;
        return -i * p.mu * z + p.alpha * (std::log(f1) + std::log(f2));
    }
    const cplx w = 1.0 + 0.5 * p.theta * p.sigma * p.sigma * z * z - i * p.delta * p.theta * z;
    if (w == cplx{}) fail(ErrorKind::BranchFailure, "log argument vanishes");
    return -i * p.mu * z + p.alpha * std::log(w);
}

void char_exponent_contour(const VGParams& p, const double* xs, std::size_t n, double q, cplx* out) {
    const cplx i{0.0, 1.0};
    double prev = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx z{xs[j], q};
        const cplx w = 1.0 + 0.5 * p.theta * p.sigma * p.sigma * z * z - i * p.delta * p.theta * z;
        if (w == cplx{}) fail(ErrorKind::BranchFailure, "log argument vanishes on the contour");
        cplx lw = std::log(w);
        if (j > 0) {
            const double turns = std::round((prev - lw.imag()) / (2.0 * std::numbers::pi));
            lw += cplx{0.0, 2.0 * std::numbers::pi * turns};
        }
        prev = lw.imag();
        out[j] = -i * p.mu * z + p.alpha * lw;
    }
}

double log_mgf(const VGParams& p, double h, double t) {
    const MgfStrip s = mgf_strip(p);
    if (!(t >= 0.0)) fail(ErrorKind::HorizonError, "t must be >= 0");
    if (!(h > s.h1 && h < s.h2)) fail(ErrorKind::OutOfStrip, "h outside the mgf strip");
    const double P = 1.0 - 0.5 * p.theta * p.sigma * p.sigma * h * h - p.delta * p.theta * h;
    return t * p.mu * h - t * p.alpha * std::log(P);
}

double mgf(const VGParams& p, double h, double t) { return std::exp(log_mgf(p, h, t)); }

Cumulants cumulants(const VGParams& p) {
    p.validate();
    const double a = p.alpha, d = p.delta, th = p.theta, s2 = p.sigma * p.sigma;
    const double k1 = p.mu + a * d * th;
    const double k2 = a * (s2 * th + d * d * th * th);
    const double k3 = a * (3.0 * d * s2 * th * th + 2.0 * d * d * d * th * th * th);
    const double k4 = a * (3.0 * s2 * s2 * th * th + 12.0 * d * d * s2 * th * th * th +
                           6.0 * d * d * d * d * th * th * th * th);
    return {k1, k2, k3 / std::pow(k2, 1.5), k4 / (k2 * k2)};
}

double levy_density(const VGParams& p, double u) {
    if (u == 0.0 || !std::isfinite(u)) fail(ErrorKind::DomainError, "Levy density diverges at u = 0");
    const SteepnessPair s = steepness(p);
    // Upward jumps decay at rate -x2, downward at rate x1 (KoBoL lambda- = x2, lambda+ = x1).
    if (u > 0.0) return p.alpha * std::exp(s.x2 * u) / u;
    return p.alpha * std::exp(s.x1 * u) / std::fabs(u);
}

KobolRecord kobol_classify(const VGParams& p) {
    const SteepnessPair s = steepness(p);
    return {0.0, p.alpha, p.alpha, s.x1, s.x2};
}

NormalLimit asymptotic_normal_params(const VGParams& p) {
    p.validate();
    return {p.mu + p.alpha * p.theta * p.delta,
            std::sqrt(p.alpha * (p.theta * p.theta * p.delta * p.delta + p.sigma * p.sigma * p.theta))};
}

} // namespace vgp
