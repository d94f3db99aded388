#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vgp/vg_core.hpp"

namespace vgp {

struct OUConfig {
    double alpha = 0.8845;    // BDLP jump rate per unit lambda-time
    double theta = 0.9378;    // mean jump size; stationary law Gamma(alpha, scale theta)
    double lambda = 1.0;
    double sigma2_0 = 0.0;
    double horizon = 1.0;
    double dt = 1.0;
    bool stationary_start = false;  // draw sigma2(0) from Gamma(alpha, theta)

    void validate() const;
    static OUConfig from(const VGParams& p, double horizon, double dt, double lambda = 1.0);
};

struct BdlpPath {
    std::vector<double> times;  // real time of each jump, a_k = s_k / lambda
    std::vector<double> sizes;
};

struct PathBundle {
    std::vector<double> times;
    std::vector<double> z_path;            // z(lambda t)
    std::vector<double> sigma2_path;
    std::vector<double> sigma2_star_path;
    std::vector<double> y_path;            // cumulative log return
    double lambda = 1.0;
    double sigma2_0 = 0.0;
    BdlpPath jumps;
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

BdlpPath simulate_bdlp(const OUConfig& cfg, std::uint64_t seed);
PathBundle simulate_ou(const OUConfig& cfg, std::uint64_t seed);
std::vector<double> integrate_variance(const PathBundle& b);
PathBundle simulate_vg_path(const VGParams& p, const OUConfig& cfg, std::uint64_t seed);

// max_t |lambda sigma2*(t) - z(lambda t) + sigma2(t) - sigma2(0)|
double cointegration_residual(const PathBundle& b);

// Integrated OU variance over [0, u] started at sigma2(0) = 0: int_0^u e^{-lambda(u-s)} dz(lambda s).
std::vector<double> ou_transition_samples(const OUConfig& cfg, double u, std::size_t n,
                                          std::uint64_t seed);

// n independent increments over [0, horizon] of the OU-driven model, each from its own stream.
std::vector<double> vg_path_increments(const VGParams& p, const OUConfig& cfg, std::size_t n,
                                       std::uint64_t seed);

// Exact draws of Y_t for the VG Levy process: t mu + delta G + sigma sqrt(G) Z, G ~ Gamma(t alpha, theta).
std::vector<double> sample_vg(const VGParams& p, double t, std::size_t n, std::uint64_t seed);

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
double ks_critical_1pct(std::size_t n);

double asymptotic_normality_test(const VGParams& p, double t_large, std::size_t n_samples,
                                 std::uint64_t seed);

} // namespace vgp
