#include "fht/types.hpp"

#include <cmath>

namespace fht {

cplx pow_nonneg(double x, cplx e) {
    if (e == cplx{0.0, 0.0}) return {1.0, 0.0};
    if (x == 0.0) return {0.0, 0.0};
    return std::exp(e * std::log(x));
}

cplx pow_principal(cplx w, cplx e) {
    if (e == cplx{0.0, 0.0}) return {1.0, 0.0};
    return std::exp(e * std::log(w));
}

void normalize_and_phase_fix(std::vector<cplx>& v) {
    double nrm = norm2(v);
    if (nrm == 0.0) return;
    std::size_t imax = 0;
    double amax = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double a = std::abs(v[i]);
        if (a > amax) {
            amax = a;
            imax = i;
        }
    }
    cplx rot = (amax > 0.0) ? std::conj(v[imax]) / std::abs(v[imax]) : cplx{1.0, 0.0};
    rot /= nrm;
    for (auto& x : v) x *= rot;
}

double norm2(std::span<const cplx> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double overlap(std::span<const cplx> x, std::span<const cplx> y) {
    double nx = norm2(x), ny = norm2(y);
    if (nx == 0.0 || ny == 0.0) return 0.0;
    return std::abs(inner(x, y)) / (nx * ny);
}

}  // namespace fht
