#include "pqni/energy.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "pqni/errors.hpp"
#include "pqni/event.hpp"

namespace pqni {

namespace {

double lp_norm(std::span<const double> v, double p) {
    if (p == 2.0) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double x : v) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / p);
}

double lp_diff_norm(std::span<const double> a, std::span<const double> b, double p) {
    if (p == 2.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::abs(a[i] - b[i]), p);
    return std::pow(s, 1.0 / p);
}

void check_pair(std::span<const double> ex, std::span<const double> en, double p) {
    if (ex.size() != en.size()) {
        throw ValidationError("energy distributions have different lengths");
    }
    if (ex.empty()) throw ValidationError("energy distributions are empty");
    if (!(p >= 1.0)) throw ValidationError("norm order p must be >= 1");
}

}  // namespace

EnergyDistribution band_energies(const WaveletPyramid& pyramid, double fs) {
    EnergyDistribution dist;
    dist.wavelet = pyramid.wavelet;
    dist.depth = pyramid.depth;
    dist.fs = fs;
    dist.energies.reserve(pyramid.details.size() + 1);
    for (const auto& level : pyramid.details) {
        double e = 0.0;
        for (double c : level) e += c * c;
        dist.energies.push_back(e);
    }
    double e = 0.0;
    for (double c : pyramid.approximation) e += c * c;
    dist.energies.push_back(e);
    return dist;
}

double eni(std::span<const double> ex, std::span<const double> en, double p) {
    check_pair(ex, en, p);
    const double nx = lp_norm(ex, p);
    const double nn = lp_norm(en, p);
    if (nx == 0.0 && nn == 0.0) {
        throw NumericalError("ENI is undefined when both distributions are all-zero");
    }
    return 100.0 * lp_diff_norm(ex, en, p) / std::sqrt(nx * nx + nn * nn);
}

double eni(const EnergyDistribution& ex, const EnergyDistribution& en, double p) {
    return eni(std::span<const double>(ex.energies), std::span<const double>(en.energies), p);
}

double wni(const EnergyDistribution& ex, const EnergyDistribution& en,
           const PreferenceProfile& profile, double p) {
    check_pair(ex.energies, en.energies, p);
    if (profile.weights.size() != ex.energies.size()) {
        throw ValidationError("preference weight vector length does not match band count");
    }
    double sum = 0.0;
    for (double w : profile.weights) sum += w;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ValidationError("preference weights must sum to 1");
    }
    std::vector<double> wx(ex.energies.size());
    std::vector<double> wn(en.energies.size());
    for (std::size_t i = 0; i < wx.size(); ++i) {
        wx[i] = profile.weights[i] * ex.energies[i];
        wn[i] = profile.weights[i] * en.energies[i];
    }
    return eni(std::span<const double>(wx), std::span<const double>(wn), p);
}

double lni(const EnergyDistribution& ex, const EnergyDistribution& en, double p) {
    check_pair(ex.energies, en.energies, p);
    if (ex.energies.size() < 2) throw ValidationError("LNI requires depth >= 1");
    const std::size_t d = ex.energies.size() - 2;  // [e_D, e_{D+1}]
    return eni(std::span<const double>(ex.energies).subspan(d, 2),
               std::span<const double>(en.energies).subspan(d, 2), p);
}

double monotonicity_margin(const EnergyDistribution& ex, const EnergyDistribution& en,
                           std::size_t band, double p) {
    check_pair(ex.energies, en.energies, p);
    if (band < 1 || band > ex.energies.size()) {
        throw ValidationError("band index out of range");
    }
    const double exj = ex.energies[band - 1];
    const double enj = en.energies[band - 1];
    if (exj <= 0.0) throw NumericalError("monotonicity margin requires e_x[band] > 0");
    const double nx = lp_norm(ex.energies, p);
    const double nn = lp_norm(en.energies, p);
    const double diff = lp_diff_norm(ex.energies, en.energies, p);
    return (1.0 - enj / exj) - diff * diff / (nx * nx + nn * nn);
}

const EnergyDistribution& nominal_reference(double fs, double f, double n_cycles,
                                            const WaveletSpec& wavelet, int depth,
                                            BoundaryMode mode) {
    using Key = std::tuple<double, double, double, int, int, int>;
    static std::map<Key, EnergyDistribution> cache;
    static std::mutex mutex;

    const Key key{fs, f, n_cycles, static_cast<int>(wavelet.family) * 100 + wavelet.order,
                  depth, static_cast<int>(mode)};
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        EventSpec spec;
        spec.fs = fs;
        spec.f = f;
        spec.n_cycles = n_cycles;
        const VoltageRecord rec = synthesize(spec);
        it = cache.emplace(key, band_energies(dwt_decompose(rec, wavelet, depth, mode), fs)).first;
    }
    return it->second;
}

}  // namespace pqni
