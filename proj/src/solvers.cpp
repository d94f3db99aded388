#include "vgp/solvers.hpp"

#include <cmath>
#include <numbers>

#include "vgp/errors.hpp"

namespace vgp {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::HorizonError: return "HorizonError";
    case ErrorKind::OutOfStrip: return "OutOfStrip";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::StripError: return "StripError";
    case ErrorKind::LengthError: return "LengthError";
    case ErrorKind::FracRange: return "FracRange";
    case ErrorKind::BracketError: return "BracketError";
    case ErrorKind::NoBracket: return "NoBracket";
    case ErrorKind::GridError: return "GridError";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::BranchFailure: return "BranchFailure";
    case ErrorKind::TailError: return "TailError";
    }
    return "Error";
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) fail(ErrorKind::BracketError, "golden_minimize needs lo < hi");
    if (!(tol > 0.0)) fail(ErrorKind::BracketError, "tolerance must be positive");
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    // Endpoints are candidates when f is monotone on the bracket.
    double best = mid, fbest = f(mid);
    if (a - lo <= tol) {
        const double fl = f(lo);
        if (fl < fbest) best = lo, fbest = fl;
    }
    if (hi - b <= tol) {
        const double fh = f(hi);
        if (fh < fbest) best = hi, fbest = fh;
    }
    return best;
}

double solve_monotone(const std::function<double(double)>& f, double target, double lo, double hi,
                      double tol) {
    if (!(lo < hi)) fail(ErrorKind::BracketError, "solve_monotone needs lo < hi");
    double a = std::nextafter(lo, hi), b = std::nextafter(hi, lo);
    double fa = f(a), fb = f(b);
    if (std::isnan(fa) || std::isnan(fb)) fail(ErrorKind::NoBracket, "function undefined at bracket");
    const bool increasing = fa < fb;
    const double fmin = increasing ? fa : fb, fmax = increasing ? fb : fa;
    if (!(target >= fmin && target <= fmax)) fail(ErrorKind::NoBracket, "target outside the range of f");
    if (std::fabs(fa - target) <= tol) return a;
    if (std::fabs(fb - target) <= tol) return b;
    for (int it = 0; it < 2000; ++it) {
        const double m = a + 0.5 * (b - a);
        if (m <= a || m >= b) return m;
        const double fm = f(m);
        if (std::fabs(fm - target) <= tol) return m;
        if ((fm < target) == increasing) a = m;
        else b = m;
    }
    return a + 0.5 * (b - a);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double std_normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

} // namespace vgp
