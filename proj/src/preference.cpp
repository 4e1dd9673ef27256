#include "pqni/preference.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pqni/errors.hpp"

namespace pqni {

PreferenceProfile preference_weights(std::span<const int> rankings, double intensity, int depth) {
    if (depth < 1) throw ValidationError("depth must be >= 1");
    const std::size_t n = static_cast<std::size_t>(depth) + 1;
    if (rankings.size() != n) {
        throw ValidationError("rankings must have one entry per band (D+1)");
    }
    std::vector<bool> seen(n, false);
    for (int o : rankings) {
        if (o < 1 || static_cast<std::size_t>(o) > n || seen[static_cast<std::size_t>(o) - 1]) {
            throw ValidationError("rankings must be a permutation of 1..D+1");
        }
        seen[static_cast<std::size_t>(o) - 1] = true;
    }
    if (!(intensity >= 1.0 && intensity <= 9.0)) {
        throw ValidationError("preference intensity must lie in [1, 9]");
    }

    PreferenceProfile profile;
    profile.rankings.assign(rankings.begin(), rankings.end());
    profile.intensity = intensity;
    profile.weights.resize(n);

    // tau_ij = I^((O_j - O_i)/D); w_i is the geometric mean of row i.
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double delta = static_cast<double>(rankings[j] - rankings[i]) / depth;
            prod *= std::pow(intensity, delta);
        }
        profile.weights[i] = std::pow(prod, 1.0 / static_cast<double>(n));
        total += profile.weights[i];
    }
    for (double& w : profile.weights) w /= total;
    return profile;
}

PreferenceProfile transient_preference(int depth) {
    std::vector<int> rankings(static_cast<std::size_t>(depth) + 1);
    for (std::size_t i = 0; i < rankings.size(); ++i) rankings[i] = static_cast<int>(i) + 1;
    return preference_weights(rankings, 9.0, depth);
}

}  // namespace pqni
