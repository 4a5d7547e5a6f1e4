#pragma once

// Complex gamma function (Lanczos, g = 7, 9 terms) with the reciprocal as the
// working primitive: coefficient formulas never divide two gamma values, they
// subtract log-gammas, so denominator poles produce exact zeros instead of
// overflow.

#include "fht/types.hpp"

namespace fht {

// Principal branch of log Gamma(z); reflection formula for Re(z) < 0.5.
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

// 1/Gamma(z); exactly 0 when z is a real nonpositive integer.
cplx reciprocal_gamma(cplx z);

// True when z sits on a pole of Gamma (real nonpositive integer).
bool is_gamma_pole(cplx z);

}  // namespace fht
