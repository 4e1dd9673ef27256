#ifndef PQNI_DWT_HPP
#define PQNI_DWT_HPP

#include <span>
#include <vector>

#include "pqni/voltage_record.hpp"
#include "pqni/wavelet.hpp"

namespace pqni {

enum class BoundaryMode { Periodic, Symmetric };

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path used by the tests and the benchmark; both produce identical output.
enum class Execution { Serial, Parallel };

/// Mallat pyramid: detail coefficients at levels 1..D (finest first) plus
/// the level-D approximation.
struct WaveletPyramid {
    std::vector<std::vector<double>> details;
    std::vector<double> approximation;
    WaveletSpec wavelet;
    int depth = 0;
    BoundaryMode mode = BoundaryMode::Periodic;
};

/// One analysis step: convolve with the analysis filter pair and downsample
/// by two. Periodic mode zero-extends odd-length inputs by one sample, which
/// keeps the decimated transform orthogonal, so total coefficient energy
/// equals input energy.
WaveletPyramid dwt_decompose(std::span<const double> signal, const WaveletSpec& wavelet,
                             int depth, BoundaryMode mode = BoundaryMode::Periodic,
                             Execution exec = Execution::Parallel);

WaveletPyramid dwt_decompose(const VoltageRecord& record, const WaveletSpec& wavelet,
                             int depth, BoundaryMode mode = BoundaryMode::Periodic,
                             Execution exec = Execution::Parallel);

}  // namespace pqni

#endif
