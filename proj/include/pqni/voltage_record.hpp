#ifndef PQNI_VOLTAGE_RECORD_HPP
#define PQNI_VOLTAGE_RECORD_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace pqni {

/// A uniformly sampled voltage waveform in per-unit, with sample k taken at
/// t = k / fs.
struct VoltageRecord {
    std::vector<double> samples;   // per-unit values
    double fs = 0.0;               // sampling frequency, Hz
    double f = 50.0;               // fundamental frequency, Hz
    double base_voltage = 1.0;     // volts; 1.0 for synthetic records
    std::optional<std::uint64_t> noise_seed;  // set when AWGN was applied

    std::size_t size() const { return samples.size(); }
    double duration() const { return fs > 0 ? static_cast<double>(samples.size()) / fs : 0.0; }

    /// Sum of squared samples.
    double energy() const {
        double e = 0.0;
        for (double v : samples) e += v * v;
        return e;
    }
};

}  // namespace pqni

#endif
