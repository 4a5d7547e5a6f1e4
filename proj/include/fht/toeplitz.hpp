#pragma once

// Finite Toeplitz sections T_n(a) = {t_{j-k}} from symbol Fourier
// coefficients: quadrature and closed-form routes, O(n log n) matvec via
// circulant embedding, and coefficient-decay diagnostics.

#include <cstddef>
#include <filesystem>

#include "fht/symbol.hpp"
#include "fht/types.hpp"

namespace fht {

// Coefficient band t_{-(n-1)} .. t_{n-1}, center-indexed; entry (j,k) of the
// section is t_{j-k}.
struct ToeplitzMatrix {
    std::size_t n = 0;
    std::vector<cplx> coeffs;   // length 2n - 1

    cplx coeff(long k) const { return coeffs[static_cast<std::size_t>(k + static_cast<long>(n) - 1)]; }
};

// t_k = (1/2 pi i) \oint a(z) z^{-k-1} dz for |k| <= n-1 by trapezoidal
// quadrature on the offset grid (one FFT of the m symbol samples).  The
// quadrature error is bounded empirically by recomputing at 2m; if any
// coefficient moves by more than tol the grid is rejected (GridTooCoarse).
// tol <= 0 selects the default: 1e-10 for smooth symbols, 1e-7 near-singular.
// Requires m >= 8n.
std::vector<cplx> fourier_coefficients(const SymbolSpec& spec, std::size_t n,
                                       std::size_t m, double tol = 0.0);

// Closed form for the singular family:
//   t_k = (-1)^k Gamma(2 alpha + 1) / (Gamma(alpha+beta+1-k) Gamma(alpha-beta+1+k))
// computed from log-gammas so denominator poles give exact zeros.
// Requires Re(2 alpha + 1) > 0.
cplx gamma_coefficient(cplx alpha, cplx beta, long k);

ToeplitzMatrix build(std::vector<cplx> coeffs, std::size_t n);

// Row-major n x n dense materialization.
std::vector<cplx> densify(const ToeplitzMatrix& T);

// T x via circulant embedding of size >= 2n-1 and FFT convolution.
std::vector<cplx> matvec(const ToeplitzMatrix& T, std::span<const cplx> x);

// Direct O(n^2) band-indexed product; the dense reference path.
std::vector<cplx> matvec_dense(const ToeplitzMatrix& T, std::span<const cplx> x);

struct DecayReport {
    double exponent = 0.0;   // |t_k| ~ |k|^{-exponent}; +inf for all-zero tails
    bool summable = false;   // exponent > 1
    double tail_sum = 0.0;   // sum of |t_k| over the fitted window
    std::size_t fit_points = 0;
};

// Least-squares fit of log|t_k| against log|k| over the outer half of the
// band (both signs of k, zeros skipped).  Requires a center-indexed band with
// at least 32 entries.
DecayReport decay_check(std::span<const cplx> coeffs);

// CSV with header "offset,re,im".
void write_coeffs_csv(const std::filesystem::path& path, std::span<const cplx> coeffs);
std::vector<cplx> read_coeffs_csv(const std::filesystem::path& path);

}  // namespace fht
