#include "fht/gammafn.hpp"

#include <cmath>
#include <limits>

namespace fht {

namespace {

// Lanczos, g = 7, 9 coefficients.
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Valid for Re(z) >= 0.5.
cplx log_gamma_core(cplx z) {
    z -= 1.0;
    cplx x = kCoef[0];
    for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + static_cast<double>(i));
    cplx t = z + kG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

bool is_gamma_pole(cplx z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
        // The complex log keeps the sign information of Gamma on the negative
        // real axis.
        return std::log(pi / std::sin(pi * z)) - log_gamma_core(1.0 - z);
    }
    return log_gamma_core(z);
}

cplx gamma_fn(cplx z) {
    if (is_gamma_pole(z)) return {std::numeric_limits<double>::infinity(), 0.0};
    return std::exp(log_gamma(z));
}

cplx reciprocal_gamma(cplx z) {
    if (is_gamma_pole(z)) return {0.0, 0.0};
    if (z.real() < 0.5) return std::sin(pi * z) / pi * std::exp(log_gamma_core(1.0 - z));
    return std::exp(-log_gamma_core(z));
}

}  // namespace fht
