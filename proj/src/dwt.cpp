#include "pqni/dwt.hpp"

#include <cmath>
#include <cstddef>

#include "pqni/errors.hpp"

namespace pqni {

namespace {

// Half-point symmetric reflection: ... x1 x0 | x0 x1 ... x(n-1) | x(n-1) ...
std::size_t reflect(std::ptrdiff_t i, std::size_t n) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    while (i < 0 || i >= m) {
        if (i < 0) i = -(i + 1);
        else i = 2 * m - 1 - i;
    }
    return static_cast<std::size_t>(i);
}

// One analysis level: y_a[n] = sum_k h[k] x[2n+k], y_d[n] likewise with g,
// indices wrapped (Periodic) or reflected (Symmetric) at the ends.
void analysis_step(const std::vector<double>& x, std::span<const double> h,
                   std::span<const double> g, BoundaryMode mode, Execution exec,
                   std::vector<double>& a, std::vector<double>& d) {
    const std::size_t m = x.size();
    const std::size_t L = h.size();
    const std::size_t nout = (m + 1) / 2;
    a.assign(nout, 0.0);
    d.assign(nout, 0.0);

    // Outputs whose filter support stays inside the signal.
    const std::size_t plain = (mode == BoundaryMode::Periodic && m >= L) ? (m - L) / 2 + 1
                              : 0;

    const bool parallel = exec == Execution::Parallel && nout >= 4096;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(nout); ++n) {
        const std::size_t base = 2 * static_cast<std::size_t>(n);
        double acc_a = 0.0;
        double acc_d = 0.0;
        if (static_cast<std::size_t>(n) < plain) {
            const double* xp = x.data() + base;
            for (std::size_t k = 0; k < L; ++k) {
                acc_a += h[k] * xp[k];
                acc_d += g[k] * xp[k];
            }
        } else if (mode == BoundaryMode::Periodic) {
            for (std::size_t k = 0; k < L; ++k) {
                const double xv = x[(base + k) % m];
                acc_a += h[k] * xv;
                acc_d += g[k] * xv;
            }
        } else {
            for (std::size_t k = 0; k < L; ++k) {
                const double xv = x[reflect(static_cast<std::ptrdiff_t>(base + k), m)];
                acc_a += h[k] * xv;
                acc_d += g[k] * xv;
            }
        }
        a[static_cast<std::size_t>(n)] = acc_a;
        d[static_cast<std::size_t>(n)] = acc_d;
    }
}

}  // namespace

WaveletPyramid dwt_decompose(std::span<const double> signal, const WaveletSpec& wavelet,
                             int depth, BoundaryMode mode, Execution exec) {
    if (depth < 1) throw ValidationError("decomposition depth must be >= 1");
    const auto h = scaling_filter(wavelet);  // validates support
    const auto g = highpass_filter(wavelet);
    if (signal.size() < h.size()) {
        throw ValidationError("record shorter than the filter support of " + wavelet.name());
    }

    WaveletPyramid pyr;
    pyr.wavelet = wavelet;
    pyr.depth = depth;
    pyr.mode = mode;
    pyr.details.reserve(static_cast<std::size_t>(depth));

    std::vector<double> cur(signal.begin(), signal.end());
    std::vector<double> a;
    std::vector<double> d;
    for (int level = 0; level < depth; ++level) {
        // Odd lengths are zero-extended by one sample so the decimated
        // transform stays orthogonal.
        if (mode == BoundaryMode::Periodic && cur.size() % 2 != 0) cur.push_back(0.0);
        analysis_step(cur, h, g, mode, exec, a, d);
        pyr.details.push_back(std::move(d));
        d.clear();
        cur.swap(a);
    }
    pyr.approximation = std::move(cur);
    return pyr;
}

WaveletPyramid dwt_decompose(const VoltageRecord& record, const WaveletSpec& wavelet,
                             int depth, BoundaryMode mode, Execution exec) {
    return dwt_decompose(std::span<const double>(record.samples), wavelet, depth, mode, exec);
}

}  // namespace pqni
