#include "vgp/fft.hpp"

#include <cmath>
#include <numbers>

#include "vgp/errors.hpp"

namespace vgp {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

void fft_inplace(std::vector<cplx>& x, bool inverse) {
    const std::size_t n = x.size();
    if (!is_pow2(n)) fail(ErrorKind::LengthError, "fft length must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> tw(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        tw[k] = {std::cos(ang), std::sin(ang)};
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2, stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const cplx u = x[i + k];
                const cplx v = x[i + k + half] * tw[k * stride];
                x[i + k] = u + v;
                x[i + k + half] = u - v;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / static_cast<double>(n);
        for (auto& v : x) v *= s;
    }
}

std::vector<cplx> fft(std::vector<cplx> x, bool inverse) {
    fft_inplace(x, inverse);
    return x;
}

namespace {

// e^{-i pi j^2 frac} with j^2 frac reduced mod 2 before the trig call.
cplx chirp(std::size_t j, double frac) {
    const double j2 = static_cast<double>(j) * static_cast<double>(j);
    const double hi = j2 * frac;
    const double lo = std::fma(j2, frac, -hi);
    const double r = std::fmod(hi, 2.0) + lo;
    const double ang = -std::numbers::pi * r;
    return {std::cos(ang), std::sin(ang)};
}

} // namespace

std::vector<cplx> frft(const std::vector<cplx>& x, double frac) {
    const std::size_t n = x.size();
    if (!is_pow2(n)) fail(ErrorKind::LengthError, "frft length must be a power of two");
    if (!(std::fabs(frac) < 1.0)) fail(ErrorKind::FracRange, "|frac| must be below 1");
    std::vector<cplx> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = chirp(j, frac);
    std::vector<cplx> y(2 * n, cplx{}), z(2 * n, cplx{});
    for (std::size_t j = 0; j < n; ++j) y[j] = x[j] * c[j];
    z[0] = std::conj(c[0]);
    for (std::size_t j = 1; j < n; ++j) z[j] = z[2 * n - j] = std::conj(c[j]);
    fft_inplace(y, false);
    fft_inplace(z, false);
    for (std::size_t i = 0; i < 2 * n; ++i) y[i] *= z[i];
    fft_inplace(y, true);
    std::vector<cplx> g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = c[k] * y[k];
    return g;
}

std::vector<cplx> frft_direct(const std::vector<cplx>& x, double frac) {
    const std::size_t n = x.size();
    std::vector<cplx> g(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx s{};
        for (std::size_t j = 0; j < n; ++j) {
            const double ph = std::fmod(static_cast<double>(j * k) * frac, 1.0);
            const double ang = -2.0 * std::numbers::pi * ph;
            s += x[j] * cplx{std::cos(ang), std::sin(ang)};
        }
        g[k] = s;
    }
    return g;
}

FourierGrid FourierGrid::make(std::size_t n, double gamma, double beta, double q) {
    FourierGrid g;
    g.n = n;
    g.gamma = gamma;
    g.beta = beta;
    g.frac = beta * gamma / (2.0 * std::numbers::pi);
    g.q = q;
    g.validate();
    return g;
}

void FourierGrid::validate() const {
    if (n < 16 || !is_pow2(n)) fail(ErrorKind::GridError, "n must be a power of two >= 16");
    if (!(gamma > 0.0) || !(beta > 0.0)) fail(ErrorKind::GridError, "gamma and beta must be positive");
    if (!(frac < 1.0)) fail(ErrorKind::FracRange, "beta * gamma / 2pi must be below 1");
}

} // namespace vgp
