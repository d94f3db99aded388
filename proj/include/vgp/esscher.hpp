#pragma once

#include "vgp/vg_core.hpp"

namespace vgp {

struct EsscherMeasure {
    double h_star = 0.0;
    double rate = 0.0;
    VGParams base;
    VGParams tilted;       // measure for h*
    VGParams tilted_plus;  // measure for h* + 1
};

// Parameters of the VG law tilted by e^{hy}: (mu, delta + h sigma^2, sigma, alpha, theta / P(h)).
VGParams esscher_params(const VGParams& p, double h);

double g_ratio(const VGParams& p, double h);
bool solvability(const VGParams& p);
EsscherMeasure solve_h_star(const VGParams& p, double r);

// Measure built from a given h (replication experiments); requires h1 < h < h2 - 1.
EsscherMeasure measure_from_h(const VGParams& p, double r, double h);

double martingale_check(const EsscherMeasure& m, double tau);
// Same residual with E^Q e^{Y} computed by quadrature of e^y against the tilted density.
double martingale_check_numeric(const EsscherMeasure& m, double tau);

} // namespace vgp
