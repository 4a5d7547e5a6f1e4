#pragma once

// Wiener-Hopf machinery for the shifted symbol W(z) = a(z) - E: winding
// number by argument tracking, the plus/minus factorization of the
// unwrapped log, the Cauchy-integral form of G_+, and eigenvector
// reconstruction from the factorization.
//
// Conventions.  With g = log(z^{-v} W) (imaginary part unwrapped along the
// grid) and hat{g}_k its Fourier modes, G_+ collects the modes k >= 0
// (constant included) and G_- the modes k < 0, so that
// exp(G_+ + G_-) = z^{-v} W.  The Fourier-space eigenvalue relation
// W Psi_+ = Psi_- then forces, for v = -1,
//
//   Psi_+(z) = k exp(-G_+(z)),
//
// i.e. the eigenvector coefficients carry exp of MINUS the plus-part (the
// product e^{G_+} Psi_+ has only nonnegative modes while z e^{-G_-} Psi_- has
// only nonpositive ones, so both sides equal the constant k).  The Cauchy
// route cauchy_gplus evaluates (1/2 pi i) \oint g(z')/(z'-z) dz', which
// reproduces the nonnegative-mode series inside the disc.

#include <cstddef>
#include <functional>
#include <utility>

#include "fht/symbol.hpp"
#include "fht/types.hpp"

#include "json.hpp"

namespace fht {

struct ShiftedSymbol {
    OffsetGrid grid;
    std::vector<cplx> samples;   // W(z_k)
    cplx shift;                  // E

    // Samples eval(spec, z_k) - E on the spec-aware offset grid.
    static ShiftedSymbol from_spec(const SymbolSpec& spec, cplx E, std::size_t m);

    // Samples f(z_k) - E on the plain half-offset grid (test symbols,
    // rational oracles).
    static ShiftedSymbol from_function(const std::function<cplx(cplx)>& f, cplx E,
                                       std::size_t m);

    double min_modulus() const;
};

// (1/2 pi) * total unwrapped argument change of W around the grid, rounded to
// an integer.  Requires m >= 1024 and min |W| >= 1e-12
// (SymbolVanishesOnCircle); rejects a pre-rounding value further than 1e-3
// from an integer (NonIntegerWinding).
int winding_number(const ShiftedSymbol& S);

struct FactorizationResult {
    int v = 0;
    cplx k_const{1.0, 0.0};            // free constant of F(z); normalization is deferred
    double reconstruction_error = 0.0;  // max_k |exp(G_+ + G_-)(z_k) - z_k^{-v} W(z_k)|
    std::vector<std::pair<long, cplx>> gplus;    // modes k >= 0, ascending
    std::vector<std::pair<long, cplx>> gminus;   // modes k < 0, ascending
    std::size_t m = 0;
    double offset = 0.5;
};

// Splits log(z^{-v} W) into G_+ / G_- as above.  Requires
// winding_number(S) == v; throws UnwrapFailure when the argument cannot be
// unwrapped (jump of ~pi between adjacent samples, or the unwrapped phase
// fails to close around the circle).
FactorizationResult factorize(const ShiftedSymbol& S, int v);

// G_+ at |z| <= 0.95 by trapezoidal Cauchy integral of the unwrapped log;
// agrees with the mode series.  Throws TooCloseToBoundary for |z| > 0.95.
cplx cauchy_gplus(const ShiftedSymbol& S, int v, cplx z);

// Mode-series evaluation sum_{k>=0} gplus_k z^k (|z| <= 1).
cplx eval_gplus(const FactorizationResult& F, cplx z);

// First n Taylor coefficients of k_const exp(-G_+(z)) (coefficient extraction
// by FFT of exp(-G_+) on the grid), unit-normalized and phase-fixed.
// Requires F.v == -1 (WrongWinding otherwise) and n <= F.m.
std::vector<cplx> eigvec_from_factorization(const FactorizationResult& F, std::size_t n);

// {v, k_const, gplus: [[k, re, im]...], gminus: [...], reconstruction_error}
nlohmann::json to_json(const FactorizationResult& F);

}  // namespace fht
