#include "vgp/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "vgp/errors.hpp"
#include "vgp/solvers.hpp"

namespace vgp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx I{0.0, 1.0};

// F(x_k) = (1/2pi) int e^{i z x_k} Psi(z) dz along Im z = q, for x_k = x0 + k beta.
std::vector<cplx> damped_inversion(const std::vector<cplx>& psi, double gamma, double beta, double q,
                                   double x0) {
    const std::size_t n = psi.size();
    const double xi0 = -0.5 * static_cast<double>(n) * gamma;
    std::vector<cplx> in(n);
    for (std::size_t j = 0; j < n; ++j) in[j] = psi[j] * std::exp(I * (static_cast<double>(j) * gamma * x0));
    const std::vector<cplx> G = frft(in, -beta * gamma / kTwoPi);
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double xk = x0 + static_cast<double>(k) * beta;
        out[k] = gamma / kTwoPi * std::exp(-q * xk) * std::exp(I * (xi0 * xk)) * G[k];
    }
    return out;
}

double lattice_step(const std::vector<double>& xs) {
    if (xs.size() < 2) return 1e-3;
    const double b = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    if (!(b > 0.0)) fail(ErrorKind::GridError, "grid must be ascending");
    for (std::size_t k = 0; k < xs.size(); ++k)
        if (std::fabs(xs[k] - (xs.front() + static_cast<double>(k) * b)) > 1e-9 * std::max(1.0, std::fabs(xs[k])))
            fail(ErrorKind::GridError, "grid must be uniform");
    return b;
}

void check_q(double q) {
    if (!(q < -1.0)) fail(ErrorKind::StripError, "contour needs q < -1");
}

// Integrand of the call price along Im z = q, per unit strike and without e^{i z x}.
cplx price_integrand(const VGParams& tilted, double tau, double r, double q, double xi) {
    const cplx z{xi, q};
    const cplx iz = I * z;
    return std::exp(-tau * (r + char_exponent(tilted, z))) / (iz * (iz - 1.0));
}

void check_contour(const EsscherMeasure& m, double q) {
    check_q(q);
    const SteepnessPair s = steepness(m.tilted);
    if (!(q > s.x2 && q < s.x1)) fail(ErrorKind::StripError, "contour outside the tilted analyticity strip");
}

double tail_estimate(const EsscherMeasure& m, double tau, double r, double q, double x, double A) {
    const double s = std::max(std::abs(price_integrand(m.tilted, tau, r, q, A)),
                              std::abs(price_integrand(m.tilted, tau, r, q, -A)));
    return std::exp(-q * x) * s * A / (1.0 + 2.0 * tau * m.tilted.alpha) / std::numbers::pi;
}

double default_q(const PricingConfig& cfg) {
    if (!std::isnan(cfg.q)) return cfg.q;
    static std::once_flag once;
    static double q1 = -1.0086;
    std::call_once(once, [] { q1 = calibrate_q(1.0); });
    return q1;
}

std::vector<cplx> generalized_values(const EsscherMeasure& m, double tau, double r, const FourierGrid& g,
                                     double x0) {
    const std::size_t n = g.n;
    std::vector<cplx> psi(n);
    const double xi0 = -0.5 * static_cast<double>(n) * g.gamma;
    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long j = 0; j < nn; ++j) psi[j] = price_integrand(m.tilted, tau, r, g.q, xi0 + static_cast<double>(j) * g.gamma);
    return damped_inversion(psi, g.gamma, g.beta, g.q, x0);
}

} // namespace

void MarketContext::validate() const {
    if (!(spot > 0.0) || !std::isfinite(spot)) fail(ErrorKind::InputError, "spot must be > 0");
    if (!(strike > 0.0) || !std::isfinite(strike)) fail(ErrorKind::InputError, "strike must be > 0");
    if (!(tau > 0.0) || !std::isfinite(tau)) fail(ErrorKind::HorizonError, "tau must be > 0");
    if (!std::isfinite(rate)) fail(ErrorKind::InputError, "rate must be finite");
}

const char* engine_name(Engine e) {
    switch (e) {
    case Engine::extended: return "extended";
    case Engine::generalized: return "generalized";
    case Engine::black_scholes: return "black_scholes";
    }
    return "?";
}

cplx payoff_transform(double k, cplx y) {
    if (!(y.imag() < -1.0)) fail(ErrorKind::StripError, "payoff transform needs Im y < -1");
    if (!(k > 0.0)) fail(ErrorKind::InputError, "k must be > 0");
    const cplx iy = I * y;
    return k * std::exp(-iy * std::log(k)) / (iy * (iy - 1.0));
}

std::vector<double> payoff_recover(double k, double q, const std::vector<double>& xs, const PayoffGrid& grid) {
    check_q(q);
    if (xs.empty()) return {};
    const double beta = lattice_step(xs);
    if (xs.size() > grid.n) fail(ErrorKind::GridError, "more output points than lattice nodes");
    FourierGrid g = FourierGrid::make(grid.n, grid.gamma, beta, q);
    std::vector<cplx> psi(g.n);
    const double xi0 = -0.5 * static_cast<double>(g.n) * g.gamma;
    for (std::size_t j = 0; j < g.n; ++j) psi[j] = payoff_transform(k, cplx{xi0 + static_cast<double>(j) * g.gamma, q});
    const std::vector<cplx> F = damped_inversion(psi, g.gamma, g.beta, q, xs.front());
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = F[i].real();
    return out;
}

double er_objective(double k, double q, double M, std::size_t m, const PayoffGrid& grid) {
    if (m < 2) fail(ErrorKind::GridError, "er_objective needs m >= 2");
    const std::vector<double> xs = uniform_grid(-M, M, m);
    const std::vector<double> rec = payoff_recover(k, q, xs, grid);
    double ss = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double e = std::max(std::exp(xs[j]) - k, 0.0) - rec[j];
        ss += e * e;
    }
    return std::sqrt(ss / static_cast<double>(m));
}

double calibrate_q(double k, const PayoffGrid& grid) {
    return golden_minimize([&](double q) { return er_objective(k, q, 1.0, 101, grid); }, -3.0, -1.001, 1e-6);
}

EsscherMeasure pricing_measure(const VGParams& p, double r, const PricingConfig& cfg) {
    if (cfg.h_star_override) return measure_from_h(p, r, *cfg.h_star_override);
    return solve_h_star(p, r);
}

PriceQuote price_extended(const EsscherMeasure& m, const MarketContext& mkt, const PricingConfig& cfg) {
    mkt.validate();
    const double y = std::log(mkt.strike / mkt.spot);
    double up_plus, up;
    if (cfg.cdf_route == CdfRoute::mixture) {
        up_plus = sf_mixture(m.tilted_plus, y, mkt.tau, cfg.mixture);
        up = sf_mixture(m.tilted, y, mkt.tau, cfg.mixture);
    } else {
        up_plus = 1.0 - cdf_fourier(m.tilted_plus, {y}, mkt.tau, cfg.fourier).values[0];
        up = 1.0 - cdf_fourier(m.tilted, {y}, mkt.tau, cfg.fourier).values[0];
    }
    PriceQuote q;
    q.engine = Engine::extended;
    q.price = mkt.spot * up_plus - mkt.strike * std::exp(-mkt.rate * mkt.tau) * up;
    q.diagnostics.h_star = m.h_star;
    return q;
}

PriceQuote price_extended(const VGParams& p, const MarketContext& mkt, const PricingConfig& cfg) {
    return price_extended(pricing_measure(p, mkt.rate, cfg), mkt, cfg);
}

FourierGrid generalized_grid(const EsscherMeasure& m, double tau, double x, double q, std::size_t max_n,
                             double* tail_bound, double* alias_bound) {
    check_contour(m, q);
    // Periodic images sit 2pi/gamma apart; the damped price grows like e^{(q+1)x} to the right.
    const double period = std::max((27.7 + std::max(x, 0.0)) / -(q + 1.0), 4.0 * std::fabs(x) + 20.0);
    const double gamma = kTwoPi / period;
    double A = 8.0;
    while (tail_estimate(m, tau, m.rate, q, x, A) > 1e-12 && 2.0 * A / gamma < static_cast<double>(max_n)) A *= 2.0;
    std::size_t n = std::max<std::size_t>(16, next_pow2(static_cast<std::size_t>(2.0 * A / gamma) + 1));
    n = std::min(n, std::max<std::size_t>(16, max_n));
    const double beta = 1e-3;
    FourierGrid g = FourierGrid::make(n, gamma, beta, q);
    if (tail_bound) *tail_bound = tail_estimate(m, tau, m.rate, q, x, 0.5 * static_cast<double>(n) * gamma);
    if (alias_bound) *alias_bound = std::exp(x + (q + 1.0) * period);
    return g;
}

PriceQuote price_generalized(const EsscherMeasure& m, const MarketContext& mkt, const FourierGrid& grid) {
    mkt.validate();
    grid.validate();
    check_contour(m, grid.q);
    const double x = std::log(mkt.spot / mkt.strike);
    const double x0 = x - 0.5 * static_cast<double>(grid.n) * grid.beta;
    const std::vector<cplx> F = generalized_values(m, mkt.tau, mkt.rate, grid, x0);
    const cplx v = F[grid.n / 2];
    PriceQuote qt;
    qt.engine = Engine::generalized;
    qt.price = mkt.strike * v.real();
    qt.diagnostics.grid = grid;
    qt.diagnostics.imag_residue = mkt.strike * std::fabs(v.imag());
    qt.diagnostics.h_star = m.h_star;
    qt.diagnostics.tail_bound = tail_estimate(m, mkt.tau, mkt.rate, grid.q, x, 0.5 * static_cast<double>(grid.n) * grid.gamma);
    return qt;
}

PriceQuote price_generalized(const EsscherMeasure& m, const MarketContext& mkt, const PricingConfig& cfg) {
    mkt.validate();
    const double q = default_q(cfg);
    const double x = std::log(mkt.spot / mkt.strike);
    double tail = 0.0, alias = 0.0;
    const FourierGrid g = generalized_grid(m, mkt.tau, x, q, cfg.max_n, &tail, &alias);
    if (cfg.strict && tail > 1e-9) fail(ErrorKind::TailError, "truncation bound unmet at the node cap");
    PriceQuote qt = price_generalized(m, mkt, g);
    qt.diagnostics.tail_bound = tail;
    qt.diagnostics.alias_bound = alias;
    return qt;
}

PriceQuote price_generalized(const VGParams& p, const MarketContext& mkt, const FourierGrid& grid) {
    return price_generalized(solve_h_star(p, mkt.rate), mkt, grid);
}

std::vector<PriceQuote> price_generalized_strip(const EsscherMeasure& m, double spot, double rate, double tau,
                                                const std::vector<double>& strikes, const PricingConfig& cfg) {
    if (strikes.empty()) return {};
    std::vector<double> xs(strikes.size());
    for (std::size_t i = 0; i < strikes.size(); ++i) {
        MarketContext{spot, strikes[i], rate, tau}.validate();
        xs[i] = std::log(spot / strikes[i]);
    }
    const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    const double lo = *lo_it, hi = *hi_it;
    const double q = default_q(cfg);
    double tail = 0.0, alias = 0.0;
    EsscherMeasure mm = m;
    mm.rate = rate;
    FourierGrid g = generalized_grid(mm, tau, std::max(std::fabs(lo), std::fabs(hi)), q, cfg.max_n, &tail, &alias);
    if (cfg.strict && tail > 1e-9) fail(ErrorKind::TailError, "truncation bound unmet at the node cap");
    const double width = std::max(hi - lo, 1e-3);
    g = FourierGrid::make(g.n, g.gamma, width / (0.5 * static_cast<double>(g.n)), q);
    const double x0 = lo - 0.25 * static_cast<double>(g.n) * g.beta;
    const std::vector<cplx> F = generalized_values(mm, tau, rate, g, x0);
    std::vector<PriceQuote> out(strikes.size());
    for (std::size_t i = 0; i < strikes.size(); ++i) {
        // Four-point Lagrange interpolation on the output lattice.
        const double pos = (xs[i] - x0) / g.beta;
        long k = static_cast<long>(std::floor(pos)) - 1;
        k = std::clamp<long>(k, 0, static_cast<long>(g.n) - 4);
        const double u = pos - static_cast<double>(k);
        cplx v{};
        for (int a = 0; a < 4; ++a) {
            double w = 1.0;
            for (int b = 0; b < 4; ++b)
                if (b != a) w *= (u - b) / static_cast<double>(a - b);
            v += w * F[k + a];
        }
        PriceQuote& qt = out[i];
        qt.engine = Engine::generalized;
        qt.price = strikes[i] * v.real();
        qt.diagnostics.grid = g;
        qt.diagnostics.imag_residue = strikes[i] * std::fabs(v.imag());
        qt.diagnostics.tail_bound = tail;
        qt.diagnostics.alias_bound = alias;
        qt.diagnostics.h_star = m.h_star;
    }
    return out;
}

PriceQuote black_scholes(const MarketContext& mkt, double vol) {
    mkt.validate();
    if (!(vol > 0.0)) fail(ErrorKind::InputError, "vol must be > 0");
    const double sq = vol * std::sqrt(mkt.tau);
    const double d1 = (std::log(mkt.spot / mkt.strike) + (mkt.rate + 0.5 * vol * vol) * mkt.tau) / sq;
    const double d2 = d1 - sq;
    PriceQuote q;
    q.engine = Engine::black_scholes;
    q.price = mkt.spot * std_normal_cdf(d1) - mkt.strike * std::exp(-mkt.rate * mkt.tau) * std_normal_cdf(d2);
    return q;
}

std::vector<SurfaceCell> price_surface(const VGParams& p, double r, double spot, const std::vector<double>& strikes,
                                       const std::vector<double>& taus, Engine engine, const PricingConfig& cfg,
                                       double vol_bs, Exec exec) {
    const std::size_t ns = strikes.size(), nt = taus.size();
    std::vector<SurfaceCell> cells(ns * nt);
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < nt; ++j) {
            MarketContext{spot, strikes[i], r, taus[j]}.validate();
            cells[i * nt + j] = {strikes[i], spot / strikes[i], taus[j], {}};
        }
    if (engine == Engine::black_scholes) {
        for (auto& c : cells) c.quote = black_scholes({spot, c.strike, r, c.tau}, vol_bs);
        return cells;
    }
    const EsscherMeasure m = pricing_measure(p, r, cfg);
    PricingConfig local = cfg;
    if (engine == Engine::generalized) {
        local.q = default_q(cfg);
        std::vector<std::vector<PriceQuote>> rows(nt);
        for (std::size_t j = 0; j < nt; ++j) rows[j] = price_generalized_strip(m, spot, r, taus[j], strikes, local);
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < nt; ++j) cells[i * nt + j].quote = rows[j][i];
        return cells;
    }
    const long total = static_cast<long>(cells.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long c = 0; c < total; ++c)
            cells[c].quote = price_extended(m, {spot, cells[c].strike, r, cells[c].tau}, local);
    } else {
        for (long c = 0; c < total; ++c)
            cells[c].quote = price_extended(m, {spot, cells[c].strike, r, cells[c].tau}, local);
    }
    return cells;
}

std::vector<ErrorCell> error_surface(const VGParams& p, double r, double spot, const std::vector<double>& strikes,
                                     const std::vector<double>& taus, double vol_bs, const PricingConfig& cfg,
                                     Engine engine, Exec exec) {
    const auto vg = price_surface(p, r, spot, strikes, taus, engine, cfg, vol_bs, exec);
    std::vector<ErrorCell> out;
    out.reserve(vg.size());
    for (const auto& c : vg) {
        const double bs = black_scholes({spot, c.strike, r, c.tau}, vol_bs).price;
        out.push_back({c.moneyness, c.tau, (c.quote.price - bs) / c.strike});
    }
    return out;
}

std::vector<double> paper_moneyness() {
    std::vector<double> k(31);
    for (int i = 0; i < 31; ++i) k[i] = (200 - 5 * i) / 100.0;
    return k;
}

std::vector<double> paper_strikes() {
    std::vector<double> s;
    for (double k : paper_moneyness()) s.push_back(kPaperSpot / k);
    return s;
}

std::vector<double> paper_taus() { return {0.0625, 0.125, 0.25, 0.5, 0.75, 1.0}; }

} // namespace vgp
