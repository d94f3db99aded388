#include "vgp/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vgp/errors.hpp"
#include "vgp/solvers.hpp"

namespace vgp {

namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Neumaier compensated accumulator.
struct Acc {
    double s = 0.0, c = 0.0;
    void add(double v) {
        const double t = s + v;
        c += std::fabs(s) >= std::fabs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

double initial_variance(const OUConfig& cfg, Rng& rng) {
    if (!cfg.stationary_start) return cfg.sigma2_0;
    std::gamma_distribution<double> g(cfg.alpha, cfg.theta);
    return g(rng);
}

BdlpPath draw_bdlp(const OUConfig& cfg, Rng& rng) {
    const double span = cfg.lambda * cfg.horizon;
    std::poisson_distribution<long> pois(cfg.alpha * span);
    const long count = pois(rng);
    BdlpPath b;
    b.times.resize(count);
    b.sizes.resize(count);
    std::uniform_real_distribution<double> unif(0.0, span);
    for (long k = 0; k < count; ++k) b.times[k] = unif(rng) / cfg.lambda;
    std::sort(b.times.begin(), b.times.end());
    std::exponential_distribution<double> ex(1.0 / cfg.theta);
    for (long k = 0; k < count; ++k) b.sizes[k] = ex(rng);
    return b;
}

std::vector<double> time_grid(const OUConfig& cfg) {
    const auto steps = static_cast<std::size_t>(std::floor(cfg.horizon / cfg.dt + 1e-9));
    std::vector<double> t(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) t[i] = static_cast<double>(i) * cfg.dt;
    return t;
}

// z and sigma^2 on the grid from the jump list.
void fill_ou(PathBundle& b) {
    const std::size_t n = b.times.size();
    b.z_path.assign(n, 0.0);
    b.sigma2_path.assign(n, 0.0);
    b.sigma2_path[0] = b.sigma2_0;
    Acc z;
    std::size_t jk = 0;
    const auto& a = b.jumps.times;
    const auto& xi = b.jumps.sizes;
    for (std::size_t i = 1; i < n; ++i) {
        const double t1 = b.times[i];
        double s2 = b.sigma2_path[i - 1] * std::exp(-b.lambda * (t1 - b.times[i - 1]));
        while (jk < a.size() && a[jk] <= t1) {
            s2 += std::exp(-b.lambda * (t1 - a[jk])) * xi[jk];
            z.add(xi[jk]);
            ++jk;
        }
        b.sigma2_path[i] = s2;
        b.z_path[i] = z.value();
    }
}

} // namespace

void OUConfig::validate() const {
    if (!(alpha > 0.0) || !(theta > 0.0)) fail(ErrorKind::InvalidParams, "alpha and theta must be > 0");
    if (!(lambda > 0.0)) fail(ErrorKind::InvalidParams, "lambda must be > 0");
    if (!(sigma2_0 >= 0.0)) fail(ErrorKind::InvalidParams, "sigma2_0 must be >= 0");
    if (!(dt > 0.0)) fail(ErrorKind::InvalidParams, "dt must be > 0");
    if (!(horizon >= dt)) fail(ErrorKind::InvalidParams, "horizon must be >= dt");
}

OUConfig OUConfig::from(const VGParams& p, double horizon, double dt, double lambda) {
    OUConfig c;
    c.alpha = p.alpha;
    c.theta = p.theta;
    c.lambda = lambda;
    c.horizon = horizon;
    c.dt = dt;
    return c;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix(splitmix(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL));
}

BdlpPath simulate_bdlp(const OUConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    Rng rng(stream_seed(seed, 0));
    initial_variance(cfg, rng);
    return draw_bdlp(cfg, rng);
}

std::vector<double> integrate_variance(const PathBundle& b) {
    const std::size_t n = b.times.size();
    std::vector<double> out(n, 0.0);
    if (n == 0) return out;
    const double lam = b.lambda;
    const auto& a = b.jumps.times;
    const auto& xi = b.jumps.sizes;
    // Between grid points sigma^2 decays exponentially; each jump adds (1 - e^{-lambda(t - a)}) xi / lambda.
    Acc acc;
    double s2 = b.sigma2_0;
    std::size_t jk = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double t0 = b.times[i - 1], t1 = b.times[i];
        acc.add(s2 * -std::expm1(-lam * (t1 - t0)) / lam);
        s2 *= std::exp(-lam * (t1 - t0));
        while (jk < a.size() && a[jk] <= t1) {
            acc.add(-std::expm1(-lam * (t1 - a[jk])) / lam * xi[jk]);
            s2 += std::exp(-lam * (t1 - a[jk])) * xi[jk];
            ++jk;
        }
        out[i] = acc.value();
    }
    return out;
}

PathBundle simulate_ou(const OUConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    Rng rng(stream_seed(seed, 0));
    PathBundle b;
    b.lambda = cfg.lambda;
    b.sigma2_0 = initial_variance(cfg, rng);
    b.jumps = draw_bdlp(cfg, rng);
    b.times = time_grid(cfg);
    fill_ou(b);
    b.sigma2_star_path = integrate_variance(b);
    b.y_path.assign(b.times.size(), 0.0);
    return b;
}

PathBundle simulate_vg_path(const VGParams& p, const OUConfig& cfg_in, std::uint64_t seed) {
    p.validate();
    OUConfig cfg = cfg_in;
    cfg.alpha = p.alpha;
    cfg.theta = p.theta;
    cfg.validate();
    Rng rng(stream_seed(seed, 0));
    PathBundle b;
    b.lambda = cfg.lambda;
    b.sigma2_0 = initial_variance(cfg, rng);
    b.jumps = draw_bdlp(cfg, rng);
    b.times = time_grid(cfg);
    fill_ou(b);
    b.sigma2_star_path = integrate_variance(b);
    b.y_path.assign(b.times.size(), 0.0);
    std::normal_distribution<double> nd(0.0, 1.0);
    Acc y;
    for (std::size_t i = 1; i < b.times.size(); ++i) {
        const double dtv = b.times[i] - b.times[i - 1];
        const double v = std::max(b.sigma2_star_path[i] - b.sigma2_star_path[i - 1], 0.0);
        y.add(p.mu * dtv + p.delta * v + p.sigma * std::sqrt(v) * nd(rng));
        b.y_path[i] = y.value();
    }
    return b;
}

double cointegration_residual(const PathBundle& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < b.times.size(); ++i) {
        const double r = b.lambda * b.sigma2_star_path[i] - b.z_path[i] + b.sigma2_path[i] - b.sigma2_0;
        worst = std::max(worst, std::fabs(r));
    }
    return worst;
}

std::vector<double> ou_transition_samples(const OUConfig& cfg_in, double u, std::size_t n, std::uint64_t seed) {
    OUConfig cfg = cfg_in;
    cfg.horizon = u;
    cfg.dt = u;
    cfg.sigma2_0 = 0.0;
    cfg.stationary_start = false;
    cfg.validate();
    std::vector<double> out(n);
    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nn; ++i) {
        Rng rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
        const BdlpPath b = draw_bdlp(cfg, rng);
        double s = 0.0;
        for (std::size_t k = 0; k < b.times.size(); ++k) s += std::exp(-cfg.lambda * (u - b.times[k])) * b.sizes[k];
        out[i] = s;
    }
    return out;
}

std::vector<double> vg_path_increments(const VGParams& p, const OUConfig& cfg, std::size_t n, std::uint64_t seed) {
    std::vector<double> out(n);
    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nn; ++i) {
        const PathBundle b = simulate_vg_path(p, cfg, stream_seed(seed, static_cast<std::uint64_t>(i)));
        out[i] = b.y_path.back();
    }
    return out;
}

std::vector<double> sample_vg(const VGParams& p, double t, std::size_t n, std::uint64_t seed) {
    p.validate();
    if (!(t > 0.0)) fail(ErrorKind::HorizonError, "t must be > 0");
    std::vector<double> out(n);
    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nn; ++i) {
        Rng rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
        std::gamma_distribution<double> gd(t * p.alpha, p.theta);
        std::normal_distribution<double> nd(0.0, 1.0);
        const double g = gd(rng);
        out[i] = t * p.mu + p.delta * g + p.sigma * std::sqrt(g) * nd(rng);
    }
    return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) fail(ErrorKind::InputError, "no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - F, F - static_cast<double>(i) / n});
    }
    return d;
}

double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

double asymptotic_normality_test(const VGParams& p, double t_large, std::size_t n_samples, std::uint64_t seed) {
    const NormalLimit nl = asymptotic_normal_params(p);
    std::vector<double> y = sample_vg(p, t_large, n_samples, seed);
    const double at = t_large * nl.a, bt = std::sqrt(t_large) * nl.b;
    for (double& v : y) v = (v - at) / bt;
    return ks_statistic(std::move(y), std_normal_cdf);
}

} // namespace vgp
