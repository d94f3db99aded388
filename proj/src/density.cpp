#include "vgp/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "vgp/errors.hpp"
#include "vgp/esscher.hpp"
#include "vgp/fft.hpp"
#include "vgp/solvers.hpp"

namespace vgp {

namespace {

constexpr double kLog2Pi = 1.8378770664093453;

void check_horizon(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::HorizonError, "t must be > 0");
}

double upper_limit(const VGParams& p, double s, const MixtureOptions& opt) {
    double b = opt.b;
    while (-b / p.theta + s * std::log(b) >= std::log(1e-12)) b *= 2.0;
    return b;
}

// Mixture integrals are taken in u = log v, so v^{s-1} dv = v^s du.
NewtonCotesRule log_rule(double v_lo, double b, long panels) {
    return make_rule(std::log(v_lo), std::log(b), panels);
}

double mixture_cdf(const VGParams& p, double y, double t, const MixtureOptions& opt, bool upper) {
    p.validate();
    check_horizon(t);
    const double s = t * p.alpha;
    const double z = y - t * p.mu;
    const double b = upper_limit(p, s, opt);
    const double cg = -std::lgamma(s) - s * std::log(p.theta);
    // Gamma mass below v_lo is under 1e-18; its contribution is added from the v -> 0 limit of Phi.
    double log_vlo = (std::log(1e-18) + std::lgamma(s + 1.0) + s * std::log(p.theta)) / s;
    log_vlo = std::clamp(log_vlo, std::log(1e-300), std::log(b) - 1.0);
    const double v_lo = std::exp(log_vlo);
    const NewtonCotesRule rule = log_rule(v_lo, b, opt.panels);
    const double sign = upper ? -1.0 : 1.0;
    auto g = [&](double u) {
        const double v = std::exp(u);
        const double arg = sign * (z - p.delta * v) / (p.sigma * std::sqrt(v));
        return std::exp(s * u - v / p.theta + cg) * std_normal_cdf(arg);
    };
    std::vector<double> vals(rule.nodes());
    for (std::size_t i = 0; i < vals.size(); ++i)
        vals[i] = g((i + 1 == vals.size()) ? rule.b : rule.node(i));
    double lower_mass = std::exp(s * (log_vlo - std::log(p.theta)) - std::lgamma(s + 1.0));
    const double limit = z == 0.0 ? 0.5 : ((sign * z > 0.0) ? 1.0 : 0.0);
    return std::clamp(composite_sum(vals, rule) + lower_mass * limit, 0.0, 1.0);
}

} // namespace

namespace {

// Density at y = t mu + z; taking the offset avoids losing small z to rounding.
double pdf_mixture_offset(const VGParams& p, double z, double t, const MixtureOptions& opt) {
    p.validate();
    check_horizon(t);
    const double s = t * p.alpha;
    const double s2 = p.sigma * p.sigma;
    const double c = z * z / (2.0 * s2);
    const double cst = -std::lgamma(s) - s * std::log(p.theta) - std::log(p.sigma) - 0.5 * kLog2Pi;
    const double b = upper_limit(p, s, opt);
    double log_vlo = -std::numeric_limits<double>::infinity();
    if (c > 0.0) log_vlo = std::log(c / 800.0);
    if (s > 0.5 + 1e-12) {
        const double e = s - 0.5;
        log_vlo = std::max(log_vlo, (std::log(1e-18) + std::log(e) - cst) / e);
    }
    if (!std::isfinite(log_vlo)) return std::numeric_limits<double>::infinity();
    log_vlo = std::clamp(log_vlo, std::log(1e-300), std::log(b) - 1.0);
    const NewtonCotesRule rule = log_rule(std::exp(log_vlo), b, opt.panels);
    std::vector<double> vals(rule.nodes());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double u = (i + 1 == vals.size()) ? rule.b : rule.node(i);
        const double v = std::exp(u);
        const double d = z - p.delta * v;
        vals[i] = std::exp((s - 0.5) * u - v / p.theta - d * d / (2.0 * s2 * v) + cst);
    }
    return composite_sum(vals, rule);
}

} // namespace

double pdf_mixture(const VGParams& p, double y, double t, const MixtureOptions& opt) {
    return pdf_mixture_offset(p, y - t * p.mu, t, opt);
}

double cdf_mixture(const VGParams& p, double y, double t, const MixtureOptions& opt) {
    return mixture_cdf(p, y, t, opt, false);
}

double sf_mixture(const VGParams& p, double y, double t, const MixtureOptions& opt) {
    return mixture_cdf(p, y, t, opt, true);
}

std::vector<double> pdf_mixture_grid(const VGParams& p, const std::vector<double>& ys, double t,
                                     const MixtureOptions& opt, Exec exec) {
    std::vector<double> out(ys.size());
    const long n = static_cast<long>(ys.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) out[i] = pdf_mixture(p, ys[i], t, opt);
    } else {
        for (long i = 0; i < n; ++i) out[i] = pdf_mixture(p, ys[i], t, opt);
    }
    return out;
}

std::vector<double> cdf_mixture_grid(const VGParams& p, const std::vector<double>& ys, double t,
                                     const MixtureOptions& opt, Exec exec) {
    std::vector<double> out(ys.size());
    const long n = static_cast<long>(ys.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) out[i] = cdf_mixture(p, ys[i], t, opt);
    } else {
        for (long i = 0; i < n; ++i) out[i] = cdf_mixture(p, ys[i], t, opt);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fourier inversion.
//
// The lattice xi_j = (j - n/2 + 1/2) gamma is symmetric and skips 0. The body is one FRFT;
// the rest of the infinite lattice, sum_{l >= 0} z^l g(a + l gamma) with z = e^{i omega gamma},
// is expanded as sum_k u_k E_k(z), u_k the Taylor coefficients of g(a + gamma s) and
// E_k(z) = sum_l l^k z^l = z A_k(z) / (1 - z)^{k+1} (Eulerian polynomials).

namespace {

constexpr int kTailTerms = 80;

struct EulerianTable {
    std::vector<std::vector<double>> a;
    EulerianTable() : a(kTailTerms + 1) {
        a[1] = {1.0};
        for (int k = 2; k <= kTailTerms; ++k) {
            a[k].assign(k, 0.0);
            for (int m = 0; m < k; ++m) {
                double v = 0.0;
                if (m < k - 1) v += (m + 1) * a[k - 1][m];
                if (m >= 1) v += (k - m) * a[k - 1][m - 1];
                a[k][m] = v;
            }
        }
    }
};

const EulerianTable& eulerian() {
    static const EulerianTable t;
    return t;
}

struct TailResult {
    cplx value;
    bool ok;
};

// log g(xi) = -s [log(1 + i xi/x1) + log(1 + i xi/x2)] (minus log(i xi) for the cdf).
cplx log_g(double xi, double s, double x1, double x2, bool cdf) {
    const cplx i{0.0, 1.0};
    cplx l = -s * (std::log(1.0 + i * xi / x1) + std::log(1.0 + i * xi / x2));
    if (cdf) l -= std::log(i * xi);
    return l;
}

TailResult lattice_tail(double a, double omega, double gamma, double s, double x1, double x2, bool cdf) {
    const cplx i{0.0, 1.0};
    const double th = omega * gamma;
    const cplx z = std::exp(i * th);
    const cplx one_minus_z = -2.0 * i * std::sin(0.5 * th) * std::exp(0.5 * i * th);
    if (std::abs(one_minus_z) == 0.0) return {cplx{}, false};
    const cplx w = 1.0 / one_minus_z;

    std::vector<cplx> ell(kTailTerms + 1), u(kTailTerms + 1);
    const cplx r1 = gamma / (a - i * x1), r2 = gamma / (a - i * x2), r0 = gamma / a;
    cplx p1 = 1.0, p2 = 1.0;
    double p0 = 1.0;
    for (int k = 1; k <= kTailTerms; ++k) {
        p1 *= r1;
        p2 *= r2;
        p0 *= r0.real();
        const double sg = (k % 2 == 1) ? 1.0 : -1.0;
        ell[k] = -s * sg / k * (p1 + p2);
        if (cdf) ell[k] -= sg / k * p0;
    }
    u[0] = std::exp(log_g(a, s, x1, x2, cdf));
    cplx sum = u[0] * w;
    cplx wpow = w;
    const auto& eu = eulerian().a;
    double prev = std::abs(sum), min_term = prev;
    bool converged = false;
    int rising = 0;
    for (int k = 1; k <= kTailTerms; ++k) {
        cplx acc{};
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * ell[j] * u[k - j];
        u[k] = acc / static_cast<double>(k);
        wpow *= w;
        cplx ak{};
        for (int m = k - 1; m >= 0; --m) ak = ak * z + eu[k][m];
        const cplx term = u[k] * z * ak * wpow;
        const double mag = std::abs(term);
        if (!std::isfinite(mag)) break;
        rising = mag > prev ? rising + 1 : 0;
        if (rising >= 2) break;
        prev = mag;
        sum += term;
        min_term = std::min(min_term, mag);
        if (mag <= 1e-17 * std::abs(sum)) {
            converged = true;
            break;
        }
    }
    const bool ok = converged || min_term * gamma / std::numbers::pi < 1e-13;
    return {std::exp(i * omega * a) * sum, ok};
}

FourierResult fourier_invert(const VGParams& p, const std::vector<double>& ys, double t,
                             const FourierOptions& opt, bool cdf) {
    p.validate();
    check_horizon(t);
    if (ys.empty()) fail(ErrorKind::GridError, "empty grid");
    const std::size_t m = ys.size();
    const double y0 = ys.front();
    double beta = 1.0;
    if (m > 1) {
        beta = (ys.back() - ys.front()) / static_cast<double>(m - 1);
        if (!(beta > 0.0)) fail(ErrorKind::GridError, "grid must be ascending");
        for (std::size_t k = 0; k < m; ++k)
            if (std::fabs(ys[k] - (y0 + static_cast<double>(k) * beta)) > 1e-9 * std::max(1.0, std::fabs(ys[k])))
                fail(ErrorKind::GridError, "grid must be uniform");
    }
    const SteepnessPair sp = steepness(p);
    const Cumulants cu = cumulants(p);
    const double s = t * p.alpha, tmu = t * p.mu;
    const double mean = t * cu.mean, sd = std::sqrt(t * cu.variance);
    double span = 0.0, omega_min = std::numeric_limits<double>::infinity();
    for (double y : ys) {
        span = std::max(span, std::fabs(y - mean));
        omega_min = std::min(omega_min, std::fabs(tmu - y));
    }
    const double rate = std::min(sp.x1, -sp.x2);
    double gamma = opt.gamma;
    if (!(gamma > 0.0)) {
        const double period = span + 12.0 * sd + 45.0 / rate + std::max(0.0, 1.0 - s) * 10.0 / rate;
        gamma = 2.0 * std::numbers::pi / period;
    }
    if (!(beta * gamma < 2.0 * std::numbers::pi)) fail(ErrorKind::GridError, "output spacing too coarse for the frequency lattice");

    // Half-width: where |g| < 1e-17, else far enough out for the tail expansion to converge.
    const double s2t = 0.5 * p.sigma * p.sigma * p.theta;
    const double a_decay = std::sqrt(std::exp(std::log(1e17) / s) / s2t);
    const double a_floor = 64.0 * std::max({sp.x1, -sp.x2, gamma});
    const double a_tail = omega_min > 0.0 ? 40.0 / omega_min : std::numeric_limits<double>::infinity();
    const double a_want = std::min(a_decay, std::max(a_floor, a_tail));
    std::size_t n = next_pow2(static_cast<std::size_t>(std::min(2.0 * a_want / gamma, 4.0 * static_cast<double>(opt.max_n))) + 1);
    n = std::max({n, next_pow2(m), std::size_t{16}});
    if (n > opt.max_n) n = std::max(opt.max_n, next_pow2(m));

    const double xi0 = (0.5 - 0.5 * static_cast<double>(n)) * gamma;
    std::vector<cplx> x(n);
    const cplx i{0.0, 1.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double xi = xi0 + static_cast<double>(j) * gamma;
        x[j] = std::exp(log_g(xi, s, sp.x1, sp.x2, cdf) + i * ((tmu - y0) * xi));
    }
    const std::vector<cplx> G = frft(x, beta * gamma / (2.0 * std::numbers::pi));

    const double a_next = (0.5 * static_cast<double>(n) + 0.5) * gamma;
    const double tail_mag = std::exp(log_g(a_next, s, sp.x1, sp.x2, cdf).real());
    const bool need_tail = tail_mag > 1e-17;

    FourierResult res;
    res.values.resize(m);
    res.diag.n = n;
    res.diag.gamma = gamma;
    res.diag.beta = beta;
    res.diag.half_width = a_next - gamma;
    res.diag.tail_magnitude = tail_mag;
    const double scale = gamma / (2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < m; ++k) {
        const double kb = static_cast<double>(k) * beta;
        const cplx body = std::exp(-i * (xi0 * kb)) * G[k];
        cplx total = body;
        if (need_tail) {
            const TailResult tr = lattice_tail(a_next, tmu - ys[k], gamma, s, sp.x1, sp.x2, cdf);
            if (!tr.ok) ++res.diag.unresolved;
            total += 2.0 * tr.value.real();
        }
        res.diag.imag_residue = std::max(res.diag.imag_residue, std::fabs(scale * body.imag()));
        res.values[k] = cdf ? 0.5 - scale * total.real() : scale * total.real();
    }
    if (opt.strict && res.diag.unresolved > 0)
        fail(ErrorKind::TailError, "lattice tail unresolved at " + std::to_string(res.diag.unresolved) + " points");
    return res;
}

} // namespace

FourierResult pdf_fourier(const VGParams& p, const std::vector<double>& ys, double t, const FourierOptions& opt) {
    return fourier_invert(p, ys, t, opt, false);
}

FourierResult cdf_fourier(const VGParams& p, const std::vector<double>& ys, double t, const FourierOptions& opt) {
    return fourier_invert(p, ys, t, opt, true);
}

double esscher_pdf(const VGParams& p, double h, double y, double t, const MixtureOptions& opt) {
    return pdf_mixture(esscher_params(p, h), y, t, opt);
}

double esscher_pdf_tilted(const VGParams& p, double h, double y, double t, const MixtureOptions& opt) {
    const double lm = log_mgf(p, h, t);
    return std::exp(h * y - lm) * pdf_mixture(p, y, t, opt);
}

double expect_pdf(const VGParams& p, double t, const std::function<double(double)>& fn, double h, double step,
                  const MixtureOptions& opt) {
    p.validate();
    check_horizon(t);
    const MgfStrip st = mgf_strip(p);
    if (!(h > st.h1 && h < st.h2)) fail(ErrorKind::OutOfStrip, "weight growth outside the mgf strip");
    if (!(step > 0.0 && step <= 0.5)) fail(ErrorKind::GridError, "step must lie in (0, 0.5]");
    const double tmu = t * p.mu;
    const Cumulants cu = cumulants(p);
    const double sd = std::sqrt(t * cu.variance), drift = std::fabs(t * cu.mean - tmu);
    const double zmax[2] = {drift + 14.0 * sd + 60.0 / (h - st.h1), drift + 14.0 * sd + 60.0 / (st.h2 - h)};
    // z = e^{(pi/2) sinh u} on each half line, trapezoid in u.
    const long lo = -static_cast<long>(std::ceil(4.5 / step)), hi = static_cast<long>(std::ceil(3.5 / step));
    std::vector<double> vals(static_cast<std::size_t>(2 * (hi - lo + 1)));
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = lo; k <= hi; ++k) {
        const double u = static_cast<double>(k) * step;
        const double z = std::exp(0.5 * std::numbers::pi * std::sinh(u));
        const double jac = 0.5 * std::numbers::pi * std::cosh(u) * z;
        for (int side = 0; side < 2; ++side) {
            const double off = side ? z : -z;
            double v = 0.0;
            if (z <= zmax[side]) {
                const double f = pdf_mixture_offset(p, off, t, opt);
                if (f > 0.0) v = jac * fn(tmu + off) * f;
            }
            vals[static_cast<std::size_t>(2 * (k - lo) + side)] = v;
        }
    }
    for (double v : vals)
        if (!std::isfinite(v)) fail(ErrorKind::NonFiniteSample, "non-finite integrand in expectation");
    return step * pairwise_sum(vals.data(), vals.size());
}

DensityGrid density_grid(const VGParams& p, const std::vector<double>& ys, double t, const MixtureOptions& opt) {
    DensityGrid g;
    g.ys = ys;
    g.t = t;
    g.params = p;
    g.pdf = pdf_mixture_grid(p, ys, t, opt);
    g.cdf = cdf_mixture_grid(p, ys, t, opt);
    return g;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    if (points < 2 || !(hi > lo)) fail(ErrorKind::GridError, "grid needs at least two points and lo < hi");
    std::vector<double> ys(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) ys[k] = lo + static_cast<double>(k) * step;
    ys.back() = hi;
    return ys;
}

} // namespace vgp
