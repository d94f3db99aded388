#pragma once

#include <complex>

namespace vgp {

using cplx = std::complex<double>;

struct VGParams {
    double mu = 0.0;
    double delta = 0.0;
    double sigma = 1.0;
    double alpha = 1.0;
    double theta = 1.0;

    void validate() const;
};

// Table 1 estimates (daily percent returns, one trading day per unit of model time).
VGParams table1_params();

// Rescale daily-percent parameters to a clock of `periods` units per model time and
// log-returns divided by `scale`: (N mu/c, delta, sigma/sqrt c, N alpha, theta/c).
VGParams rescale(const VGParams& p, double periods, double scale);

struct MgfStrip {
    double h1;
    double h2;
};

struct SteepnessPair {
    double x1;
    double x2;
};

struct Cumulants {
    double mean;
    double variance;
    double skewness;
    double excess_kurtosis;
};

struct KobolRecord {
    double nu;
    double c_plus;
    double c_minus;
    double lambda_plus;
    double lambda_minus;
};

MgfStrip mgf_strip(const VGParams& p);
SteepnessPair steepness(const VGParams& p);

cplx char_fn(const VGParams& p, double xi, double t);

// phi(z) = -i mu z + alpha log(1 + theta sigma^2 z^2 / 2 - i delta theta z); E e^{i xi Y_t} = e^{-t phi(xi)}.
cplx char_exponent(const VGParams& p, cplx z);

// Exponent along the contour Im z = q at the points xs[j] + i q, with the log unwrapped node to node.
void char_exponent_contour(const VGParams& p, const double* xs, std::size_t n, double q, cplx* out);

double mgf(const VGParams& p, double h, double t);
double log_mgf(const VGParams& p, double h, double t);
Cumulants cumulants(const VGParams& p);
double levy_density(const VGParams& p, double u);
KobolRecord kobol_classify(const VGParams& p);

struct NormalLimit {
    double a;
    double b;
};
NormalLimit asymptotic_normal_params(const VGParams& p);

} // namespace vgp
