#pragma once

// Dense non-Hermitian eigendecomposition of Toeplitz sections with residual
// certification.  Backed by LAPACK zgeev (balancing included); normalization,
// phase fixing, ordering and residuals are applied on top.

#include <cstddef>
#include <filesystem>
#include <utility>

#include "fht/toeplitz.hpp"
#include "fht/types.hpp"

namespace fht {

struct EigenPair {
    cplx lambda;
    std::vector<cplx> right;   // unit 2-norm, largest-modulus entry positive real
    std::vector<cplx> left;    // transpose convention: left^T T = lambda left^T; empty unless requested
    double residual = 0.0;     // ||T right - lambda right||_2
};

// All n eigenpairs, sorted by arg(lambda) then |lambda|.  Residuals are
// computed via the structured matvec and reported, never assumed.  Left
// vectors (w with w^T T = lambda w^T) are returned when want_left is set.
// Requires n <= 4096.  Throws ConvergenceFailure if the QR iteration fails.
std::vector<EigenPair> full_spectrum(const ToeplitzMatrix& T, bool want_left = false);

// argmin_i |lambda_i - predicted|; ties go to the smaller index.
std::pair<std::size_t, double> match(std::span<const EigenPair> spectrum, cplx predicted);

double residual(const ToeplitzMatrix& T, const EigenPair& pair);

// Frobenius norm from the coefficient band.
double frobenius_norm(const ToeplitzMatrix& T);

// CSV "index,re_lambda,im_lambda,residual"; eigenvectors optionally to a
// companion file "index,j,re_psi,im_psi".
void write_spectrum_csv(const std::filesystem::path& path, std::span<const EigenPair> spectrum);
void write_eigvecs_csv(const std::filesystem::path& path, std::span<const EigenPair> spectrum);

}  // namespace fht
