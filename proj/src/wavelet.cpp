#include "pqni/wavelet.hpp"

#include <cmath>

#include "pqni/errors.hpp"

namespace pqni {

namespace {

const char* family_prefix(WaveletFamily family) {
    switch (family) {
    case WaveletFamily::Daubechies: return "db";
    case WaveletFamily::Symlet: return "sym";
    case WaveletFamily::Coiflet: return "coif";
    }
    return "?";
}

}  // namespace

std::string WaveletSpec::name() const {
    return family_prefix(family) + std::to_string(order);
}

WaveletSpec WaveletSpec::parse(const std::string& name) {
    const auto split = [&](const char* prefix, WaveletFamily family) -> WaveletSpec {
        const std::string p(prefix);
        const std::string digits = name.substr(p.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw ValidationError("malformed wavelet name: " + name);
        }
        WaveletSpec w{family, std::stoi(digits)};
        if (!is_supported(w)) throw ValidationError("unsupported wavelet: " + name);
        return w;
    };
    if (name.rfind("db", 0) == 0) return split("db", WaveletFamily::Daubechies);
    if (name.rfind("sym", 0) == 0) return split("sym", WaveletFamily::Symlet);
    if (name.rfind("coif", 0) == 0) return split("coif", WaveletFamily::Coiflet);
    if (name == "haar") return WaveletSpec{WaveletFamily::Daubechies, 1};
    throw ValidationError("unknown wavelet family: " + name);
}

bool is_supported(const WaveletSpec& wavelet) {
    return !detail::scaling_filter_table(wavelet.family, wavelet.order).empty();
}

std::vector<WaveletSpec> supported_wavelets() {
    std::vector<WaveletSpec> out;
    for (int n = 1; n <= 20; ++n) out.push_back({WaveletFamily::Daubechies, n});
    for (int n = 2; n <= 20; ++n) out.push_back({WaveletFamily::Symlet, n});
    for (int n = 1; n <= 5; ++n) out.push_back({WaveletFamily::Coiflet, n});
    return out;
}

std::span<const double> scaling_filter(const WaveletSpec& wavelet) {
    auto h = detail::scaling_filter_table(wavelet.family, wavelet.order);
    if (h.empty()) throw ValidationError("unsupported wavelet: " + wavelet.name());
    return h;
}

std::vector<double> highpass_filter(const WaveletSpec& wavelet) {
    const auto h = scaling_filter(wavelet);
    const std::size_t L = h.size();
    std::vector<double> g(L);
    for (std::size_t k = 0; k < L; ++k) {
        g[k] = (k % 2 == 0 ? 1.0 : -1.0) * h[L - 1 - k];
    }
    return g;
}

int decomposition_depth(double fs, double f) {
    if (!(f > 0.0) || !(f < fs / 2.0)) {
        throw ValidationError("decomposition depth requires 0 < f < fs/2");
    }
    // Largest D with f * 2^D <= fs, i.e. D = floor(log2(fs/f)); the lower
    // bracket fs/2^(D+1) <= f then holds automatically.
    int depth = 0;
    double edge = 2.0 * f;
    while (edge * 2.0 <= fs) {
        edge *= 2.0;
        ++depth;
    }
    return depth + 1;
}

std::vector<Band> band_layout(double fs, int depth) {
    if (depth < 1) throw ValidationError("depth must be >= 1");
    std::vector<Band> bands;
    bands.reserve(static_cast<std::size_t>(depth) + 1);
    double hi = fs / 2.0;
    for (int k = 1; k <= depth; ++k) {
        bands.push_back({k, hi / 2.0, hi, false});
        hi /= 2.0;
    }
    bands.push_back({depth + 1, 0.0, hi, true});
    return bands;
}

}  // namespace pqni
