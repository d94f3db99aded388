#include "vgp/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "vgp/errors.hpp"

namespace vgp {

namespace {

struct Rational {
    __int128 num = 0;
    __int128 den = 1;

    static __int128 gcd(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    Rational(__int128 n = 0, __int128 d = 1) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd(num, den);
        num /= g;
        den /= g;
    }
    Rational operator+(const Rational& o) const {
        __int128 g = gcd(den, o.den);
        return Rational(num * (o.den / g) + o.num * (den / g), den / g * o.den);
    }
    Rational operator*(const Rational& o) const {
        __int128 g1 = gcd(num, o.den), g2 = gcd(o.num, den);
        return Rational((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

std::array<double, NewtonCotesRule::Q + 1> compute_weights() {
    constexpr int Q = NewtonCotesRule::Q;
    std::array<double, Q + 1> w{};
    for (int j = 0; j <= Q; ++j) {
        // Lagrange basis l_j(x) = prod_{m != j} (x - m) / (j - m) as integer-coefficient polynomial.
        std::vector<Rational> poly{Rational(1)};
        __int128 denom = 1;
        for (int m = 0; m <= Q; ++m) {
            if (m == j) continue;
            std::vector<Rational> next(poly.size() + 1);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = next[i + 1] + poly[i];
                next[i] = next[i] + poly[i] * Rational(-m);
            }
            poly = std::move(next);
            denom *= (j - m);
        }
        Rational integral(0);
        __int128 pw = Q;  // Q^{i+1}
        for (std::size_t i = 0; i < poly.size(); ++i) {
            integral = integral + poly[i] * Rational(pw, static_cast<__int128>(i + 1));
            pw *= Q;
        }
        w[j] = (integral * Rational(1, denom)).to_double();
    }
    return w;
}

} // namespace

const std::array<double, NewtonCotesRule::Q + 1>& newton_cotes_12_weights() {
    static const auto w = compute_weights();
    return w;
}

NewtonCotesRule make_rule(double a, double b, long panels) {
    if (panels < 1) fail(ErrorKind::GridError, "panel count must be at least 1");
    if (!(b > a)) fail(ErrorKind::GridError, "integration bounds must satisfy a < b");
    NewtonCotesRule r;
    r.weights = newton_cotes_12_weights();
    r.panels = panels;
    r.a = a;
    r.b = b;
    return r;
}

double pairwise_sum(const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

namespace {

double panel_sum(const std::function<double(double)>& f, const NewtonCotesRule& rule, long p) {
    constexpr int Q = NewtonCotesRule::Q;
    const double h = rule.step();
    double s = 0.0;
    for (int j = 0; j <= Q; ++j) {
        const std::size_t i = static_cast<std::size_t>(p) * Q + j;
        const double x = (i + 1 == rule.nodes()) ? rule.b : rule.a + static_cast<double>(i) * h;
        const double fx = f(x);
        if (!std::isfinite(fx)) fail(ErrorKind::NonFiniteSample, "integrand is not finite at a node");
        s += rule.weights[j] * fx;
    }
    return s;
}

} // namespace

double composite_integrate(const std::function<double(double)>& f, const NewtonCotesRule& rule,
                           Exec exec) {
    std::vector<double> part(static_cast<std::size_t>(rule.panels));
    if (exec == Exec::parallel) {
        bool failed = false;
#pragma omp parallel for schedule(static)
        for (long p = 0; p < rule.panels; ++p) {
            try {
                part[p] = panel_sum(f, rule, p);
            } catch (const Error&) {
#pragma omp atomic write
                failed = true;
            }
        }
        if (failed) fail(ErrorKind::NonFiniteSample, "integrand is not finite at a node");
    } else {
        for (long p = 0; p < rule.panels; ++p) part[p] = panel_sum(f, rule, p);
    }
    return rule.step() * pairwise_sum(part.data(), part.size());
}

double composite_sum(const std::vector<double>& samples, const NewtonCotesRule& rule) {
    constexpr int Q = NewtonCotesRule::Q;
    if (samples.size() != rule.nodes()) fail(ErrorKind::LengthError, "sample count does not match rule");
    std::vector<double> part(static_cast<std::size_t>(rule.panels));
    for (long p = 0; p < rule.panels; ++p) {
        double s = 0.0;
        const double* g = samples.data() + static_cast<std::size_t>(p) * Q;
        for (int j = 0; j <= Q; ++j) s += rule.weights[j] * g[j];
        part[p] = s;
    }
    return rule.step() * pairwise_sum(part.data(), part.size());
}

} // namespace vgp
