#pragma once

// Closed-form asymptotic momenta, eigenvalues and plane-wave eigenvectors for
// all four families, plus the two-term eigenvector correction model
//
//   psi_j ~ A z_crit^{-(j-1)} + B (j+1)^{-2 alpha - 1}.

#include <cstddef>
#include <functional>

#include "fht/symbol.hpp"
#include "fht/types.hpp"

namespace fht {

// p^l = 2 pi l / n + i (2 alpha + 1) log(n)/n, the O(n^{-1}) term dropped.
cplx momentum(long l, std::size_t n, cplx alpha);

// The further truncation 2 pi l / n (the log term dropped as well).
cplx momentum_truncated(long l, std::size_t n);

// E^l ~ (-1)^beta 4^alpha sin^{2 alpha}(pi l / n) exp(-2 i pi beta l / n),
// with (-1)^beta = exp(i pi beta).  l = 0: returns exp(i pi beta) for
// alpha = 0, zero for Re(alpha) > 0, complex infinity otherwise.
cplx eigenvalue_singular(cplx alpha, cplx beta, long l, std::size_t n);

// The truncated per-family formulas: each equals the symbol evaluated at
// w = exp(-2 pi i l / n) under the library's branch conventions.
cplx eigenvalue_type1(cplx alpha, cplx beta, long l, std::size_t n);
cplx eigenvalue_type2(cplx z0, cplx delta, cplx gamma,
                      const std::function<cplx(cplx)>& b, long l, std::size_t n);
cplx eigenvalue_type3(std::span<const PointSingularity> sing,
                      const std::function<cplx(cplx)>& c, long l, std::size_t n);

// Dispatch on spec.kind.
cplx predicted_eigenvalue(const SymbolSpec& spec, long l, std::size_t n);

// psi_j = exp(i p j), j = 0..n-1, unit-normalized and phase-fixed.
std::vector<cplx> planewave(cplx p, std::size_t n);

struct AsymptoticPrediction {
    long l = 0;
    std::size_t n = 0;
    cplx p;                  // full momentum (log term kept), a_eff = spec.effective_alpha()
    cplx E;                  // truncated per-family eigenvalue
    std::vector<cplx> psi;   // plane wave at p
    SymbolKind family = SymbolKind::Singular;
};

AsymptoticPrediction predict(const SymbolSpec& spec, long l, std::size_t n);

struct CorrectionFit {
    cplx A;
    cplx B;
    cplx z_crit;
    double residual = 0.0;      // ||psi_w - fit||_2 / ||psi_w||_2 over the window
    std::size_t j_begin = 0;
    std::size_t j_end = 0;
};

// Linear least squares in (A, B) over window [j_begin, j_end) of psi.
// Requires at least 8 window points and z_crit != 0; throws SingularDesign
// when the basis columns are numerically collinear or overflow.
CorrectionFit fit_correction(std::span<const cplx> psi, cplx z_crit, cplx alpha,
                             std::size_t j_begin, std::size_t j_end);

// Newton solve of eval_continued(spec, exp(-i p)) = target from p0; used to
// place z_crit = exp(-i p) on the matched eigenvalue's actual wave.  Throws
// ConvergenceFailure if the iteration stalls.
cplx solve_momentum(const SymbolSpec& spec, cplx target, cplx p0);

}  // namespace fht
