#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace fht {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx iu{0.0, 1.0};

// x^e with x real >= 0; 0^0 = 1, 0^e = 0 for Re(e) > 0.
cplx pow_nonneg(double x, cplx e);

// w^e = exp(e log w), principal log; w^0 = 1 even at w = 0.
cplx pow_principal(cplx w, cplx e);

// Scale v to unit 2-norm and rotate so the largest-modulus entry (first such
// index on ties) is positive real.
void normalize_and_phase_fix(std::vector<cplx>& v);

double norm2(std::span<const cplx> v);

// Hermitian inner product <x, y> = sum conj(x_j) y_j.
cplx inner(std::span<const cplx> x, std::span<const cplx> y);

// |<x, y>| with both arguments rescaled to unit norm.
double overlap(std::span<const cplx> x, std::span<const cplx> y);

}  // namespace fht
