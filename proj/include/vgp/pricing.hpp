#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "vgp/density.hpp"
#include "vgp/esscher.hpp"
#include "vgp/fft.hpp"

namespace vgp {

struct MarketContext {
    double spot = 0.0;
    double strike = 0.0;
    double rate = 0.0;
    double tau = 0.0;

    double moneyness() const { return spot / strike; }
    void validate() const;
};

enum class Engine { extended, generalized, black_scholes };
const char* engine_name(Engine e);

enum class CdfRoute { mixture, fourier };

struct PriceDiagnostics {
    FourierGrid grid;           // generalized engine only
    double tail_bound = 0.0;    // truncation bound on price / K
    double alias_bound = 0.0;   // periodic-image bound on price / K
    double imag_residue = 0.0;  // |Im| of the assembled integral, currency units
    double h_star = 0.0;
};

struct PriceQuote {
    double price = 0.0;
    Engine engine = Engine::extended;
    PriceDiagnostics diagnostics;
};

// Fixed lattice used for payoff recovery and q calibration.
struct PayoffGrid {
    std::size_t n = 1u << 15;
    double gamma = 0.005;
};

struct PricingConfig {
    CdfRoute cdf_route = CdfRoute::mixture;
    MixtureOptions mixture;
    FourierOptions fourier;
    double q = std::numeric_limits<double>::quiet_NaN();  // contour damping; NaN calibrates at k = 1
    std::size_t max_n = 1u << 20;     // generalized engine node cap
    bool strict = false;              // TailError when the node cap leaves the truncation bound unmet
    std::optional<double> h_star_override;
};

cplx payoff_transform(double k, cplx y);
std::vector<double> payoff_recover(double k, double q, const std::vector<double>& xs,
                                   const PayoffGrid& grid = {});
double er_objective(double k, double q, double M = 1.0, std::size_t m = 101,
                    const PayoffGrid& grid = {});
double calibrate_q(double k, const PayoffGrid& grid = {});

EsscherMeasure pricing_measure(const VGParams& p, double r, const PricingConfig& cfg);

PriceQuote price_extended(const EsscherMeasure& m, const MarketContext& mkt,
                          const PricingConfig& cfg = {});
PriceQuote price_extended(const VGParams& p, const MarketContext& mkt, const PricingConfig& cfg = {});

// Adaptive lattice for the damped contour: aliasing sets gamma, integrand decay sets n.
FourierGrid generalized_grid(const EsscherMeasure& m, double tau, double x, double q,
                             std::size_t max_n, double* tail_bound = nullptr,
                             double* alias_bound = nullptr);

PriceQuote price_generalized(const EsscherMeasure& m, const MarketContext& mkt,
                             const FourierGrid& grid);
PriceQuote price_generalized(const EsscherMeasure& m, const MarketContext& mkt,
                             const PricingConfig& cfg = {});
PriceQuote price_generalized(const VGParams& p, const MarketContext& mkt, const FourierGrid& grid);

// Prices K F(log(S/K)) for several strikes at one maturity from a single transform.
std::vector<PriceQuote> price_generalized_strip(const EsscherMeasure& m, double spot, double rate,
                                                double tau, const std::vector<double>& strikes,
                                                const PricingConfig& cfg = {});

PriceQuote black_scholes(const MarketContext& mkt, double vol);

struct SurfaceCell {
    double strike;
    double moneyness;
    double tau;
    PriceQuote quote;
};

struct ErrorCell {
    double k;
    double tau;
    double error;
};

std::vector<SurfaceCell> price_surface(const VGParams& p, double r, double spot,
                                       const std::vector<double>& strikes,
                                       const std::vector<double>& taus, Engine engine,
                                       const PricingConfig& cfg = {}, double vol_bs = 0.1848,
                                       Exec exec = Exec::parallel);

std::vector<ErrorCell> error_surface(const VGParams& p, double r, double spot,
                                     const std::vector<double>& strikes,
                                     const std::vector<double>& taus, double vol_bs,
                                     const PricingConfig& cfg = {}, Engine engine = Engine::extended,
                                     Exec exec = Exec::parallel);

// Replication lattice: S = 438.98, moneyness 2.00 down to 0.50, six maturities.
constexpr double kPaperSpot = 438.98;
constexpr double kPaperRate = 0.06;
constexpr double kPaperVol = 0.1848;
std::vector<double> paper_moneyness();
std::vector<double> paper_strikes();
std::vector<double> paper_taus();

} // namespace vgp
