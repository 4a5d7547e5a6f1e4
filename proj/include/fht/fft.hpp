#pragma once

#include "fht/types.hpp"

namespace fht {

// Complex DFT, FFTW-backed.  Plans are cached per size behind a mutex; the
// transforms themselves are safe to call concurrently.
//
// forward:  X_j = sum_k x_k exp(-2 pi i j k / m)
// inverse:  x_k = (1/m) sum_j X_j exp(+2 pi i j k / m)
std::vector<cplx> fft_forward(std::span<const cplx> x);
std::vector<cplx> fft_inverse(std::span<const cplx> x);

}  // namespace fht
