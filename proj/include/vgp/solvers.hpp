#pragma once

#include <functional>

namespace vgp {

double golden_minimize(const std::function<double(double)>& f, double lo, double hi, double tol);

// Root of f(x) = target for strictly monotone f on the open interval (lo, hi).
double solve_monotone(const std::function<double(double)>& f, double target, double lo, double hi,
                      double tol);

double std_normal_cdf(double x);
double std_normal_pdf(double x);

} // namespace vgp
