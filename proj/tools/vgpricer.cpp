#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "vgp/density.hpp"
#include "vgp/errors.hpp"
#include "vgp/esscher.hpp"
#include "vgp/io.hpp"
#include "vgp/pricing.hpp"
#include "vgp/simulate.hpp"

using namespace vgp;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    VGParams params;
    double rate = kPaperRate;
    double spot = kPaperSpot;
    double vol_bs = kPaperVol;
    std::string engine = "extended";
    std::optional<double> q;
    std::optional<std::size_t> n;
    std::uint64_t seed = 1;
    std::optional<double> h_star_override;
    std::string preset;
    std::string format = "csv";
    std::string out;
    double periods_per_year = 252.0;
    double return_scale = 100.0;
    int decimals = 4;
};

// Fixed-decimal CSV/JSON writer; an optional leading text column labels each row.
class Table {
public:
    explicit Table(std::vector<std::string> cols, std::string label = "") : cols_(std::move(cols)), label_(std::move(label)) {}
    void add(std::vector<double> row, std::string label = "") {
        rows_.push_back(std::move(row));
        labels_.push_back(std::move(label));
    }
    void write(std::ostream& os, const RunConfig& c, json extra = json::object()) const {
        if (c.format == "json") {
            json doc = std::move(extra);
            json rows = json::array();
            for (std::size_t k = 0; k < rows_.size(); ++k) {
                json o;
                if (!label_.empty()) o[label_] = labels_[k];
                for (std::size_t i = 0; i < cols_.size(); ++i) o[cols_[i]] = num(rows_[k][i], c.decimals);
                rows.push_back(o);
            }
            doc["rows"] = rows;
            os << doc.dump(2) << "\n";
            return;
        }
        if (!label_.empty()) os << label_ << ",";
        for (std::size_t i = 0; i < cols_.size(); ++i) os << (i ? "," : "") << cols_[i];
        os << "\n";
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (!label_.empty()) os << labels_[k] << ",";
            for (std::size_t i = 0; i < rows_[k].size(); ++i) os << (i ? "," : "") << fmt_fixed(rows_[k][i], c.decimals);
            os << "\n";
        }
        for (const auto& [k, v] : extra.items()) os << "# " << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    static json num(double v, int decimals) {
        if (!std::isfinite(v)) return fmt_fixed(v, decimals);
        return json::parse(fmt_fixed(v, decimals));
    }

private:
    std::vector<std::string> cols_;
    std::string label_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::string> labels_;
};

std::unique_ptr<std::ostream> open_out(const RunConfig& c) {
    if (c.out.empty() || c.out == "-") return std::make_unique<std::ostream>(std::cout.rdbuf());
    auto f = std::make_unique<std::ofstream>(c.out);
    if (!*f) fail(ErrorKind::InputError, "cannot open output file " + c.out);
    return f;
}

VGParams annual(const RunConfig& c) { return rescale(c.params, c.periods_per_year, c.return_scale); }

PricingConfig pricing_config(const RunConfig& c) {
    PricingConfig cfg;
    cfg.q = c.q ? *c.q : calibrate_q(1.0);
    if (c.n) cfg.max_n = *c.n;
    cfg.h_star_override = c.h_star_override;
    return cfg;
}

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorKind::InputError, std::string(name) + " must be > 0");
}

std::vector<Engine> engines_for(const std::string& e) {
    if (e == "extended") return {Engine::extended};
    if (e == "generalized") return {Engine::generalized};
    if (e == "bs") return {Engine::black_scholes};
    if (e == "both") return {Engine::extended, Engine::generalized};
    fail(ErrorKind::InputError, "unknown engine " + e);
}

int cmd_price(const RunConfig& c, double strike, double tau) {
    check_positive(c.spot, "spot");
    const MarketContext mkt{c.spot, strike, c.rate, tau};
    mkt.validate();
    check_positive(c.vol_bs, "vol");
    const auto engines = engines_for(c.engine);
    const auto p = annual(c);
    const auto cfg = pricing_config(c);
    const auto m = pricing_measure(p, c.rate, cfg);
    const double bs = black_scholes(mkt, c.vol_bs).price;
    Table t({"strike", "moneyness", "tau", "price", "bsm", "h_star", "tail_bound", "imag_residue"}, "engine");
    std::vector<double> prices;
    for (auto e : engines) {
        PriceQuote q;
        if (e == Engine::extended) q = price_extended(m, mkt, cfg);
        else if (e == Engine::generalized) q = price_generalized(m, mkt, cfg);
        else q = black_scholes(mkt, c.vol_bs);
        prices.push_back(q.price);
        t.add({strike, mkt.moneyness(), tau, q.price, bs, m.h_star, q.diagnostics.tail_bound, q.diagnostics.imag_residue},
              engine_name(e));
    }
    json extra = json::object();
    if (prices.size() == 2) extra["agreement_delta"] = Table::num(prices[0] - prices[1], c.decimals);
    auto os = open_out(c);
    t.write(*os, c, extra);
    return 0;
}

std::vector<double> read_strikes(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InputError, "cannot open strikes file " + path);
    std::vector<double> ks;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            ks.push_back(std::stod(line));
        } catch (const std::exception&) {
            fail(ErrorKind::InputError, "bad strike line: " + line);
        }
    }
    if (ks.empty()) fail(ErrorKind::InputError, "strikes file is empty");
    return ks;
}

int cmd_table(const RunConfig& c, bool paper_grid, const std::string& strikes_file, std::vector<double> taus) {
    std::vector<double> strikes;
    if (paper_grid) {
        strikes = paper_strikes();
        taus = paper_taus();
    } else {
        if (strikes_file.empty()) fail(ErrorKind::InputError, "table needs --paper-grid or --strikes-file");
        strikes = read_strikes(strikes_file);
    }
    for (double tau : taus) MarketContext{c.spot, 1.0, c.rate, tau}.validate();
    for (double k : strikes) MarketContext{c.spot, k, c.rate, 1.0}.validate();
    check_positive(c.vol_bs, "vol");
    const auto p = annual(c);
    const auto cfg = pricing_config(c);
    const auto bs = price_surface(p, c.rate, c.spot, strikes, taus, Engine::black_scholes, cfg, c.vol_bs);
    const auto ext = price_surface(p, c.rate, c.spot, strikes, taus, Engine::extended, cfg, c.vol_bs);
    const auto gen = price_surface(p, c.rate, c.spot, strikes, taus, Engine::generalized, cfg, c.vol_bs);
    Table t({"strike", "moneyness", "tau", "bsm", "vg_extended", "vg_generalized"});
    for (std::size_t i = 0; i < bs.size(); ++i)
        t.add({bs[i].strike, bs[i].moneyness, bs[i].tau, bs[i].quote.price, ext[i].quote.price, gen[i].quote.price});
    json extra;
    extra["h_star"] = Table::num(pricing_measure(p, c.rate, cfg).h_star, 6);
    extra["q"] = Table::num(cfg.q, 6);
    auto os = open_out(c);
    t.write(*os, c, c.format == "json" ? extra : json::object());
    return 0;
}

int cmd_density(const RunConfig& c, std::vector<double> ts, double lo, double hi, std::size_t points) {
    if (!(hi > lo)) fail(ErrorKind::InputError, "ymax must exceed ymin");
    if (points < 2) fail(ErrorKind::InputError, "points must be >= 2");
    for (double t : ts) check_positive(t, "t");
    c.params.validate();
    const auto ys = uniform_grid(lo, hi, points);
    Table tab({"t", "y", "pdf_mixture", "pdf_fourier", "cdf"});
    for (double t : ts) {
        const auto pm = pdf_mixture_grid(c.params, ys, t);
        const auto pf = pdf_fourier(c.params, ys, t).values;
        const auto cf = cdf_mixture_grid(c.params, ys, t);
        for (std::size_t i = 0; i < ys.size(); ++i) tab.add({t, ys[i], pm[i], pf[i], cf[i]});
    }
    auto os = open_out(c);
    RunConfig fine = c;
    fine.decimals = std::max(c.decimals, 10);
    tab.write(*os, fine);
    return 0;
}

std::function<double(double)> tabulated_cdf(const VGParams& p, double t, double lo, double hi) {
    auto ys = uniform_grid(lo, hi, 60001);
    auto F = std::make_shared<std::vector<double>>(cdf_fourier(p, ys, t).values);
    const double h = ys[1] - ys[0];
    return [F, lo, hi, h](double y) {
        if (y <= lo) return 0.0;
        if (y >= hi) return 1.0;
        const double s = (y - lo) / h;
        const std::size_t i = std::min<std::size_t>(std::size_t(s), F->size() - 2);
        const double w = s - double(i);
        return (1 - w) * (*F)[i] + w * (*F)[i + 1];
    };
}

int cmd_simulate(const RunConfig& c, double horizon, double dt, double lambda, bool stationary,
                 const std::string& stats_path) {
    c.params.validate();
    auto cfg = OUConfig::from(c.params, horizon, dt, lambda);
    cfg.stationary_start = stationary;
    cfg.validate();
    const auto b = simulate_vg_path(c.params, cfg, c.seed);
    Table t({"t", "z", "sigma2", "sigma2_star", "y"});
    for (std::size_t i = 0; i < b.times.size(); ++i)
        t.add({b.times[i], b.z_path[i], b.sigma2_path[i], b.sigma2_star_path[i], b.y_path[i]});

    json stats;
    const auto sm = sample_moments(b.sigma2_path);
    stats["stationary_mean"] = Table::num(sm.mean, 6);
    stats["stationary_var"] = Table::num(sm.variance, 6);
    stats["model_mean"] = Table::num(c.params.alpha * c.params.theta, 6);
    stats["model_var"] = Table::num(c.params.alpha * c.params.theta * c.params.theta, 6);
    stats["cointegration_residual"] = cointegration_residual(b);
    const std::size_t n = c.n ? *c.n : 2000;
    // With near-frozen stationary variance a unit-time increment has the Gamma-clock law of Y_1.
    OUConfig kc = OUConfig::from(c.params, 1.0, 1.0, 1e-3);
    kc.stationary_start = true;
    const auto inc = vg_path_increments(c.params, kc, n, c.seed);
    const auto cu = cumulants(c.params);
    const double sd = std::sqrt(cu.variance);
    const double ks = ks_statistic(inc, tabulated_cdf(c.params, 1.0, cu.mean - 40 * sd, cu.mean + 40 * sd));
    stats["ks_increment_t"] = 1.0;
    stats["ks_samples"] = n;
    stats["ks_statistic"] = Table::num(ks, 6);
    stats["ks_critical_1pct"] = Table::num(ks_critical_1pct(n), 6);

    auto os = open_out(c);
    if (c.format == "json") {
        t.write(*os, c, json{{"stats", stats}});
        return 0;
    }
    t.write(*os, c);
    if (stats_path.empty()) {
        std::cerr << stats.dump(2) << "\n";
    } else {
        std::ofstream f(stats_path);
        if (!f) fail(ErrorKind::InputError, "cannot open stats file " + stats_path);
        f << stats.dump(2) << "\n";
    }
    return 0;
}

int cmd_moments(const RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InputError, "cannot open returns file " + path);
    const auto r = read_returns_csv(in);
    const auto e = sample_moments(r.log_returns_pct);
    if (e.variance == 0.0) std::cerr << "warning: zero variance in returns; skewness and kurtosis reported as 0\n";
    const auto m = cumulants(c.params);
    const double n = double(e.n);
    Table t({"empirical", "model", "std_error"}, "statistic");
    t.add({e.mean, m.mean, std::sqrt(m.variance / n)}, "mean");
    t.add({e.variance, m.variance, m.variance * std::sqrt((m.excess_kurtosis + 2.0) / n)}, "variance");
    t.add({e.skewness, m.skewness, std::sqrt(6.0 / n)}, "skewness");
    t.add({e.kurtosis, m.excess_kurtosis + 3.0, std::sqrt(24.0 / n)}, "kurtosis");
    auto os = open_out(c);
    t.write(*os, c, c.format == "json" ? json{{"observations", e.n}} : json::object());
    return 0;
}

int cmd_calibrate_q(const RunConfig& c, const std::vector<double>& ks) {
    Table t({"k", "q_opt", "er_min"});
    for (double k : ks) {
        check_positive(k, "k");
        const double q = calibrate_q(k);
        t.add({k, q, er_objective(k, q)});
    }
    auto os = open_out(c);
    RunConfig fine = c;
    fine.decimals = std::max(c.decimals, 6);
    t.write(*os, fine);
    return 0;
}

int cmd_esscher(const RunConfig& c, std::vector<double> taus) {
    const auto p = annual(c);
    p.validate();
    const auto m = c.h_star_override ? measure_from_h(p, c.rate, *c.h_star_override) : solve_h_star(p, c.rate);
    const auto s = mgf_strip(p);
    json doc;
    doc["h_star"] = Table::num(m.h_star, 8);
    doc["h_star_model_units"] = Table::num(m.h_star / c.return_scale, 8);
    doc["strip"] = {Table::num(s.h1, 6), Table::num(s.h2, 6)};
    auto pj = [&](const VGParams& v) {
        return json{{"mu", Table::num(v.mu, 8)},     {"delta", Table::num(v.delta, 8)},
                    {"sigma", Table::num(v.sigma, 8)}, {"alpha", Table::num(v.alpha, 8)},
                    {"theta", Table::num(v.theta, 8)}};
    };
    doc["tilted"] = pj(m.tilted);
    doc["tilted_plus"] = pj(m.tilted_plus);
    json res = json::array();
    for (double tau : taus) {
        check_positive(tau, "tau");
        res.push_back({{"tau", tau},
                       {"analytic_residual", martingale_check(m, tau)},
                       {"quadrature_residual", martingale_check_numeric(m, tau)}});
    }
    doc["martingale"] = res;
    auto os = open_out(c);
    *os << doc.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variance-Gamma option pricer"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value file mirroring the flags");
    RunConfig c;
    c.params = table1_params();
    auto* g = app.add_option_group("model");
    double mu = c.params.mu, delta = c.params.delta, sigma = c.params.sigma, alpha = c.params.alpha,
           theta = c.params.theta;
    std::optional<double> q, h_override;
    std::optional<std::size_t> n;
    g->add_option("--mu", mu);
    g->add_option("--delta", delta);
    g->add_option("--sigma", sigma);
    g->add_option("--alpha", alpha);
    g->add_option("--theta", theta);
    app.add_option("--rate", c.rate);
    app.add_option("--spot", c.spot);
    app.add_option("--vol", c.vol_bs, "Black-Scholes volatility");
    app.add_option("--engine", c.engine)->check(CLI::IsMember({"extended", "generalized", "bs", "both"}));
    app.add_option("--q", q, "contour damping; default calibrates at k = 1");
    app.add_option("--n", n, "node cap (pricing) or sample count (simulate)");
    app.add_option("--seed", c.seed);
    app.add_option("--h-star-override", h_override, "Esscher parameter in annual units");
    app.add_option("--preset", c.preset)->check(CLI::IsMember({"table1"}));
    app.add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", c.out);
    app.add_option("--decimals", c.decimals)->check(CLI::Range(0, 16));
    app.add_option("--periods-per-year", c.periods_per_year, "clock periods per year for pricing");
    app.add_option("--return-scale", c.return_scale, "return units per log-return (100 for percent)");

    auto* price = app.add_subcommand("price", "price one European call");
    double strike = kPaperSpot, tau = 0.25;
    price->add_option("--strike", strike);
    price->add_option("--tau", tau);

    auto* table = app.add_subcommand("table", "price a strike x maturity surface");
    bool paper_grid = false;
    std::string strikes_file;
    std::vector<double> taus = paper_taus();
    table->add_flag("--paper-grid", paper_grid);
    table->add_option("--strikes-file", strikes_file);
    table->add_option("--taus", taus)->delimiter(',');

    auto* density = app.add_subcommand("density", "density and cdf on a grid");
    std::vector<double> ts{0.25, 0.5, 0.75, 1.0};
    double ymin = -8.0, ymax = 8.0;
    std::size_t points = 321;
    density->add_option("--t", ts)->delimiter(',');
    density->add_option("--ymin", ymin);
    density->add_option("--ymax", ymax);
    density->add_option("--points", points);

    auto* simulate = app.add_subcommand("simulate", "simulate OU variance and VG log-return paths");
    double horizon = 250.0, dt = 1.0, lambda = 1.0;
    std::string stats_path;
    simulate->add_option("--horizon", horizon);
    simulate->add_option("--dt", dt);
    simulate->add_option("--lambda", lambda);
    bool stationary = false;
    simulate->add_flag("--stationary", stationary, "draw sigma2(0) from the stationary law");
    simulate->add_option("--stats", stats_path, "stats JSON file (stderr when omitted)");

    auto* moments = app.add_subcommand("moments", "empirical vs model moments of 100 x log returns");
    std::string returns;
    moments->add_option("returns", returns)->required();

    auto* calq = app.add_subcommand("calibrate-q", "optimal contour damping per moneyness");
    std::vector<double> ks{0.5, 0.75, 1.0, 1.25, 1.5, 2.0};
    calq->add_option("--k", ks)->delimiter(',');

    auto* ess = app.add_subcommand("esscher", "Esscher parameter, tilted measure, martingale residuals");
    std::vector<double> etaus{0.25, 1.0};
    ess->add_option("--tau", etaus)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c.preset == "table1") {
            // Preset fills in anything not given explicitly.
            auto unset = [&](const char* f) { return app.count(f) == 0; };
            if (unset("--rate")) c.rate = kPaperRate;
            if (unset("--spot")) c.spot = kPaperSpot;
            if (unset("--vol")) c.vol_bs = kPaperVol;
        }
        c.params = {mu, delta, sigma, alpha, theta};
        c.params.validate();
        c.q = q;
        c.n = n;
        c.h_star_override = h_override;
        if (c.q && !(*c.q < -1.0)) fail(ErrorKind::InputError, "q must be < -1");
        if (c.n && *c.n < 2) fail(ErrorKind::InputError, "n must be >= 2");
        check_positive(c.periods_per_year, "periods-per-year");
        check_positive(c.return_scale, "return-scale");

        if (*price) return cmd_price(c, strike, tau);
        if (*table) return cmd_table(c, paper_grid, strikes_file, taus);
        if (*density) return cmd_density(c, ts, ymin, ymax, points);
        if (*simulate) return cmd_simulate(c, horizon, dt, lambda, stationary, stats_path);
        if (*moments) return cmd_moments(c, returns);
        if (*calq) return cmd_calibrate_q(c, ks);
        if (*ess) return cmd_esscher(c, etaus);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.numerical() ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
