#include "fht/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace fht {

namespace {

// One forward and one backward plan per size, created on fftw_malloc'd
// scratch (FFTW_ESTIMATE) and re-executed on per-call aligned buffers.
struct PlanCache {
    std::mutex mu;
    std::map<std::size_t, fftw_plan> fwd, bwd;

    fftw_plan get(std::size_t m, int sign) {
        std::scoped_lock lock(mu);
        auto& table = (sign == FFTW_FORWARD) ? fwd : bwd;
        auto it = table.find(m);
        if (it != table.end()) return it->second;
        fftw_complex* scratch = fftw_alloc_complex(m);
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(m), scratch, scratch, sign, FFTW_ESTIMATE);
        fftw_free(scratch);
        table.emplace(m, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<cplx> transform(std::span<const cplx> x, int sign) {
    const std::size_t m = x.size();
    fftw_complex* buf = fftw_alloc_complex(m);
    for (std::size_t i = 0; i < m; ++i) {
        buf[i][0] = x[i].real();
        buf[i][1] = x[i].imag();
    }
    fftw_execute_dft(cache().get(m, sign), buf, buf);
    std::vector<cplx> out(m);
    const double scale = (sign == FFTW_BACKWARD) ? 1.0 / static_cast<double>(m) : 1.0;
    for (std::size_t i = 0; i < m; ++i) out[i] = cplx{buf[i][0], buf[i][1]} * scale;
    fftw_free(buf);
    return out;
}

}  // namespace

std::vector<cplx> fft_forward(std::span<const cplx> x) { return transform(x, FFTW_FORWARD); }

std::vector<cplx> fft_inverse(std::span<const cplx> x) { return transform(x, FFTW_BACKWARD); }

}  // namespace fht
