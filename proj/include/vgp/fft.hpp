#pragma once

#include <complex>
#include <vector>

namespace vgp {

using cplx = std::complex<double>;

// In-place radix-2 transform. Forward uses e^{-2 pi i jk/n}; inverse scales by 1/n.
void fft_inplace(std::vector<cplx>& x, bool inverse);
std::vector<cplx> fft(std::vector<cplx> x, bool inverse = false);

// G_k = sum_j x_j e^{-2 pi i j k frac}, k = 0..n-1.
std::vector<cplx> frft(const std::vector<cplx>& x, double frac);

// Direct O(n^2) reference.
std::vector<cplx> frft_direct(const std::vector<cplx>& x, double frac);

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

// Transform lattice: inputs xi_j = -a/2 + j gamma (a = n gamma), outputs x_k = -b/2 + k beta (b = n beta).
struct FourierGrid {
    std::size_t n = 4096;
    double gamma = 0.0;
    double beta = 0.0;
    double frac = 0.0;
    double q = -1.5;

    static FourierGrid make(std::size_t n, double gamma, double beta, double q);
    void validate() const;
};

} // namespace vgp
