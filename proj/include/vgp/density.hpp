#pragma once

#include <functional>
#include <vector>

#include "vgp/quadrature.hpp"
#include "vgp/vg_core.hpp"

namespace vgp {

struct MixtureOptions {
    double b = 20.0;     // initial upper limit in v, extended until e^{-b/theta} b^{t alpha} < 1e-12
    long panels = 5000;  // Newton-Cotes panels (Q = 12 nodes each)
};

struct FourierOptions {
    double gamma = 0.0;              // frequency spacing; 0 picks it from the aliasing bound
    std::size_t max_n = 1u << 21;    // node cap
    bool strict = false;             // throw TailError when a point is left unresolved
};

struct FourierDiagnostics {
    std::size_t n = 0;
    double gamma = 0.0;
    double beta = 0.0;
    double half_width = 0.0;       // last lattice frequency
    double tail_magnitude = 0.0;   // |e^{-t phi}| at the last node
    double imag_residue = 0.0;     // largest |Im| of the assembled inversion
    std::size_t unresolved = 0;    // points whose lattice tail series did not converge
};

struct FourierResult {
    std::vector<double> values;
    FourierDiagnostics diag;
};

struct DensityGrid {
    std::vector<double> ys;
    std::vector<double> pdf;
    std::vector<double> cdf;
    double t = 0.0;
    VGParams params;
};

double pdf_mixture(const VGParams& p, double y, double t, const MixtureOptions& opt = {});
double cdf_mixture(const VGParams& p, double y, double t, const MixtureOptions& opt = {});
// Upper tail 1 - F, computed directly.
double sf_mixture(const VGParams& p, double y, double t, const MixtureOptions& opt = {});

std::vector<double> pdf_mixture_grid(const VGParams& p, const std::vector<double>& ys, double t,
                                     const MixtureOptions& opt = {}, Exec exec = Exec::parallel);
std::vector<double> cdf_mixture_grid(const VGParams& p, const std::vector<double>& ys, double t,
                                     const MixtureOptions& opt = {}, Exec exec = Exec::parallel);

// Fourier inversion on a uniform grid (a single point is allowed).
FourierResult pdf_fourier(const VGParams& p, const std::vector<double>& ys, double t,
                          const FourierOptions& opt = {});
FourierResult cdf_fourier(const VGParams& p, const std::vector<double>& ys, double t,
                          const FourierOptions& opt = {});

// Esscher-tilted density: via transformed parameters, or as e^{hy} f(y,t) / M(h,t).
double esscher_pdf(const VGParams& p, double h, double y, double t, const MixtureOptions& opt = {});
double esscher_pdf_tilted(const VGParams& p, double h, double y, double t,
                          const MixtureOptions& opt = {});

// int fn(y) f(y,t) dy for fn growing at most like e^{hy}; split at t mu, each half line mapped by
// z = e^{(pi/2) sinh u} and summed with trapezoid step `step` in u.
double expect_pdf(const VGParams& p, double t, const std::function<double(double)>& fn, double h = 0.0,
                  double step = 1.0 / 16.0, const MixtureOptions& opt = {});

DensityGrid density_grid(const VGParams& p, const std::vector<double>& ys, double t,
                         const MixtureOptions& opt = {});

std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

} // namespace vgp
