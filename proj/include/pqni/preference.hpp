#ifndef PQNI_PREFERENCE_HPP
#define PQNI_PREFERENCE_HPP

#include <span>
#include <vector>

namespace pqni {

/// Decision-maker band preferences: rankings O (a permutation of 1..D+1,
/// 1 = most preferred), intensity I in [1, 9] (1 = indifference, 9 = extreme
/// prejudice), and the derived multiplicative-preference weights W, which
/// are positive and sum to 1.
struct PreferenceProfile {
    std::vector<int> rankings;
    double intensity = 1.0;
    std::vector<double> weights;
};

/// Multiplicative preference articulation: tau_ij = I^((O_j - O_i)/D),
/// w_i = geometric mean of row i, W = w / sum(w).
PreferenceProfile preference_weights(std::span<const int> rankings, double intensity, int depth);

/// O = [1, 2, ..., D+1] with I = 9: weights favouring the highest frequency
/// band, used to make WNI sensitive to transients.
PreferenceProfile transient_preference(int depth);

}  // namespace pqni

#endif
