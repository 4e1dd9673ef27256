#ifndef PQNI_HARNESS_HPP
#define PQNI_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqni/energy.hpp"
#include "pqni/event.hpp"

namespace pqni {

/// Parameter grids for a severity sweep. Axes irrelevant to `kind` are
/// ignored; the grid is the cross product of the active axes.
struct SweepSpec {
    EventKind kind = EventKind::Sag;
    std::vector<double> alphas;
    std::vector<double> durations_cycles;
    std::vector<double> betas;
    std::vector<double> gammas;
    double f_tr = 4000.0;

    WaveletSpec wavelet{WaveletFamily::Symlet, 4};
    double p = 2.0;
    std::optional<double> snr_db;
    std::uint64_t seed = 0;

    double fs = 10000.0;
    double f = 50.0;
    double n_cycles = 40.0;

    bool compute_wni = false;
    bool compute_lni = false;
    std::optional<PreferenceProfile> preference;  // default: transient_preference(D)
    Execution exec = Execution::Parallel;

    /// The study defaults: 25 x 10 grid for sag/swell/interruption,
    /// 10 x 10 transient grid, 5 x 5 x 5 x 10 simultaneous grid.
    static SweepSpec defaults(EventKind kind);
};

struct SweepPoint {
    double alpha = 0.0;
    double duration_cycles = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double eni = 0.0;
    std::optional<double> wni;
    std::optional<double> lni;
};

/// Adjacent-pair monotonicity along one severity axis, all other axes fixed.
struct AxisVerdict {
    std::string axis;
    std::size_t comparisons = 0;
    std::size_t violations = 0;       // ENI decreased where severity increased
    double max_violation = 0.0;       // largest decrease, index points
    std::size_t wni_violations = 0;   // same, for WNI when computed
    double wni_max_violation = 0.0;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<std::string> axes;        // active axis names, slowest first
    std::vector<std::size_t> shape;       // grid extent per axis
    std::vector<SweepPoint> points;       // row-major over `shape`
    std::vector<AxisVerdict> verdicts;    // one per axis

    double min_eni() const;
    double max_eni() const;
    std::size_t total_violations() const;
};

/// Synthesizes every grid event, computes the configured indices against the
/// nominal reference, and evaluates adjacent-pair monotonicity per axis.
/// Grid points are independent and evaluated in parallel under
/// Execution::Parallel; results are merged in grid order.
SweepResult run_sweep(const SweepSpec& spec);

/// Index table for one pair of simultaneous events plus comparison verdicts.
struct SimultaneousComparison {
    EventSpec first;
    EventSpec second;
    IndexReport report_first;
    IndexReport report_second;
    int lni_order = 0;  // +1: LNI1 > LNI2, -1: LNI1 < LNI2, 0: tie
    int wni_order = 0;  // same for WNI
};

/// Computes ENI, LNI and WNI for both events per the simultaneous-event
/// index selection. Both specs must be simultaneous kinds.
SimultaneousComparison simultaneous_scenario(const EventSpec& first, const EventSpec& second,
                                             const WaveletSpec& wavelet = {WaveletFamily::Symlet, 4},
                                             double p = 2.0);

struct WaveletSweep {
    WaveletSpec wavelet;
    SweepResult result;
    double index_range = 0.0;  // max - min ENI over the grid
};

/// Runs the sweep once per wavelet. Monotonicity verdicts are reported per
/// wavelet; `index_range` captures the per-wavelet sensitivity.
std::vector<WaveletSweep> wavelet_sensitivity(const SweepSpec& base,
                                              const std::vector<WaveletSpec>& wavelets);

/// Characteristic parameters estimated from a recording; fields are present
/// only when meaningful for the detected event.
struct EstimatedParams {
    std::optional<double> alpha_pu;
    std::optional<double> td_cycles;
    std::optional<double> beta_pu;
    std::optional<double> t_tr_ms;
    std::optional<double> f_tr_hz;
};

/// Sag magnitude and duration from per-half-cycle RMS. The duration is a
/// fractional count of half-cycles whose RMS falls below the midpoint
/// between nominal and the sag floor, with edge windows contributing their
/// estimated in-sag coverage.
EstimatedParams estimate_sag_params(const VoltageRecord& record);

/// Transient magnitude, duration and frequency from the residual after
/// removing a least-squares fundamental fit. Throws DetectionFailure when no
/// transient rises above the noise floor.
EstimatedParams estimate_transient_params(const VoltageRecord& record);

enum class RideThrough { Running, Stopped };

/// Piecewise ASD sag tolerance: any magnitude up to 3 cycles, a linear
/// decrease of tolerable magnitude 1 -> 0.1 over 3 -> 4 cycles, and 0.1 pu
/// sustained beyond that.
RideThrough asd_ride_through(double alpha, double td_cycles);

struct AsdPoint {
    double alpha = 0.0;
    double td_cycles = 0.0;
    double eni = 0.0;
    RideThrough region = RideThrough::Running;
};

struct AsdStudy {
    std::vector<AsdPoint> points;      // row-major: alpha outer, td inner
    std::size_t n_alpha = 0, n_td = 0;
    double threshold_lo = 0.0;         // min ENI over Stopped points
    double threshold_hi = 0.0;         // ENI at the tolerance-curve knee (alpha=1, td=4)
    double max_running_eni = 0.0;      // max ENI over Running points
    double eni_origin = 0.0;           // ENI at (0, 0)
    double eni_extreme = 0.0;          // ENI at (1, 30)
};

/// Labels each grid point with its ride-through verdict and ENI and reports
/// the delineation thresholds: events with ENI <= threshold_lo always ride
/// through, and ENI > threshold_hi only occurs on stopped events outside the
/// sustained-tolerable strip (alpha <= 0.1, td > 4).
AsdStudy asd_contour_study(const std::vector<double>& alphas, const std::vector<double>& tds,
                           const WaveletSpec& wavelet = {WaveletFamily::Symlet, 4},
                           double p = 2.0, Execution exec = Execution::Parallel);

/// Default ride-through study grid: alpha 0..1 step 0.01, td 0..30 step 0.25.
std::vector<double> asd_default_alphas();
std::vector<double> asd_default_durations();

/// Evenly spaced grid helper, inclusive of both endpoints.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace pqni

#endif
