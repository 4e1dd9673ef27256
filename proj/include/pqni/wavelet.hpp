#ifndef PQNI_WAVELET_HPP
#define PQNI_WAVELET_HPP

#include <span>
#include <string>
#include <vector>

namespace pqni {

enum class WaveletFamily { Daubechies, Symlet, Coiflet };

/// One member of an orthogonal wavelet family, e.g. "sym4".
/// Supported orders: db1..db20, sym2..sym20, coif1..coif5.
struct WaveletSpec {
    WaveletFamily family = WaveletFamily::Symlet;
    int order = 4;

    std::string name() const;
    static WaveletSpec parse(const std::string& name);

    bool operator==(const WaveletSpec&) const = default;
};

bool is_supported(const WaveletSpec& wavelet);

/// All supported wavelets, db1..db20 then sym2..sym20 then coif1..coif5.
std::vector<WaveletSpec> supported_wavelets();

/// Analysis low-pass (scaling) filter h: sum h = sqrt(2), sum h^2 = 1.
/// Throws ValidationError for unsupported wavelets.
std::span<const double> scaling_filter(const WaveletSpec& wavelet);

/// Analysis high-pass filter, g[k] = (-1)^k h[L-1-k].
std::vector<double> highpass_filter(const WaveletSpec& wavelet);

/// Decomposition depth D satisfying fs/2^(D+1) <= f <= fs/2^D,
/// i.e. D = floor(log2(fs/f)). Requires 0 < f < fs/2.
int decomposition_depth(double fs, double f);

struct Band {
    int id = 0;          // 1..D for details, D+1 for the approximation
    double f_low = 0.0;  // Hz
    double f_high = 0.0; // Hz
    bool approximation = false;
};

/// D detail bands (fs/2^(k+1), fs/2^k] for k = 1..D plus the approximation
/// band [0, fs/2^(D+1)], ordered finest first.
std::vector<Band> band_layout(double fs, int depth);

namespace detail {
std::span<const double> scaling_filter_table(WaveletFamily family, int order);
}

}  // namespace pqni

#endif
