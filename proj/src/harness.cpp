#include "pqni/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>

#include "pqni/errors.hpp"
#include "pqni/preference.hpp"

namespace pqni {

namespace {

constexpr double kMonotoneEps = 1e-12;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step: decorrelates per-point noise streams while staying
    // independent of evaluation order.
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct AxisLayout {
    std::vector<std::string> names;
    std::vector<const std::vector<double>*> grids;
};

AxisLayout active_axes(const SweepSpec& spec) {
    switch (spec.kind) {
    case EventKind::Sag:
    case EventKind::Swell:
    case EventKind::Interruption:
        return {{"alpha", "td"}, {&spec.alphas, &spec.durations_cycles}};
    case EventKind::OscTransient:
        return {{"beta", "gamma"}, {&spec.betas, &spec.gammas}};
    case EventKind::SagWithTransient:
    case EventKind::SwellWithTransient:
        return {{"alpha", "td", "beta", "gamma"},
                {&spec.alphas, &spec.durations_cycles, &spec.betas, &spec.gammas}};
    default:
        throw ValidationError("sweeps are defined for event kinds, not nominal records");
    }
}

void check_sorted(const std::vector<double>& grid, const std::string& axis) {
    if (grid.empty()) throw ValidationError("empty grid for axis " + axis);
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw ValidationError("grid for axis " + axis + " must be ascending");
    }
}

EventSpec point_spec(const SweepSpec& spec, const AxisLayout& axes,
                     const std::vector<std::size_t>& idx) {
    EventSpec e;
    e.kind = spec.kind;
    e.fs = spec.fs;
    e.f = spec.f;
    e.n_cycles = spec.n_cycles;
    e.f_tr = spec.f_tr;
    if (spec.kind == EventKind::OscTransient) {
        e.beta = (*axes.grids[0])[idx[0]];
        e.gamma = (*axes.grids[1])[idx[1]];
    } else {
        e.alpha = (*axes.grids[0])[idx[0]];
        e.duration_cycles = (*axes.grids[1])[idx[1]];
        if (idx.size() == 4) {
            e.beta = (*axes.grids[2])[idx[2]];
            e.gamma = (*axes.grids[3])[idx[3]];
        }
    }
    return e;
}

std::string describe_point(const AxisLayout& axes, const std::vector<std::size_t>& idx) {
    std::string out = "(";
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (a) out += ", ";
        out += axes.names[a] + "=" + std::to_string((*axes.grids[a])[idx[a]]);
    }
    return out + ")";
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) throw ValidationError("linspace needs at least one point");
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = lo;
        return v;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) v[i] = lo + static_cast<double>(i) * step;
    v.back() = hi;
    return v;
}

SweepSpec SweepSpec::defaults(EventKind kind) {
    SweepSpec s;
    s.kind = kind;
    switch (kind) {
    case EventKind::Sag:
        s.alphas = linspace(0.1, 0.9, 25);
        s.durations_cycles = linspace(0.5, 30.0, 10);
        break;
    case EventKind::Swell:
        s.alphas = linspace(0.1, 0.8, 25);
        s.durations_cycles = linspace(0.5, 30.0, 10);
        break;
    case EventKind::Interruption:
        s.alphas = linspace(0.91, 1.0, 25);
        s.durations_cycles = linspace(0.5, 30.0, 10);
        break;
    case EventKind::OscTransient:
        s.betas = linspace(1.0, 4.0, 10);
        s.gammas = linspace(-125.0, -25.0, 10);
        s.f_tr = 4000.0;
        s.compute_wni = true;
        break;
    case EventKind::SagWithTransient:
    case EventKind::SwellWithTransient:
        s.alphas = linspace(0.1, 0.9, 5);
        if (kind == EventKind::SwellWithTransient) s.alphas = linspace(0.1, 0.8, 5);
        s.durations_cycles = linspace(0.5, 30.0, 5);
        s.betas = linspace(1.0, 4.0, 5);
        s.gammas = linspace(-125.0, -25.0, 10);
        s.f_tr = 4000.0;
        s.compute_wni = true;
        s.compute_lni = true;
        break;
    default:
        throw ValidationError("no sweep defaults for nominal records");
    }
    return s;
}

double SweepResult::min_eni() const {
    double m = points.empty() ? 0.0 : points.front().eni;
    for (const auto& p : points) m = std::min(m, p.eni);
    return m;
}

double SweepResult::max_eni() const {
    double m = points.empty() ? 0.0 : points.front().eni;
    for (const auto& p : points) m = std::max(m, p.eni);
    return m;
}

std::size_t SweepResult::total_violations() const {
    std::size_t n = 0;
    for (const auto& v : verdicts) n += v.violations + v.wni_violations;
    return n;
}

SweepResult run_sweep(const SweepSpec& spec) {
    const AxisLayout axes = active_axes(spec);
    for (std::size_t a = 0; a < axes.grids.size(); ++a) check_sorted(*axes.grids[a], axes.names[a]);

    SweepResult result;
    result.spec = spec;
    result.axes = axes.names;
    for (const auto* g : axes.grids) result.shape.push_back(g->size());

    std::size_t total = 1;
    for (std::size_t s : result.shape) total *= s;
    result.points.resize(total);

    const int depth = decomposition_depth(spec.fs, spec.f);
    const EnergyDistribution& reference =
        nominal_reference(spec.fs, spec.f, spec.n_cycles, spec.wavelet, depth);
    PreferenceProfile profile;
    if (spec.compute_wni) {
        profile = spec.preference ? *spec.preference : transient_preference(depth);
    }

    const auto unflatten = [&](std::size_t flat) {
        std::vector<std::size_t> idx(result.shape.size());
        for (std::size_t a = result.shape.size(); a-- > 0;) {
            idx[a] = flat % result.shape[a];
            flat /= result.shape[a];
        }
        return idx;
    };

    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    const auto record_failure = [&](std::exception_ptr ep) {
#pragma omp critical(pqni_sweep_failure)
        if (!failure) {
            failure = std::move(ep);
            failed.store(true, std::memory_order_relaxed);
        }
    };

    const bool parallel = spec.exec == Execution::Parallel && total > 1;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(total); ++flat) {
        if (failed.load(std::memory_order_relaxed)) continue;
        const auto idx = unflatten(static_cast<std::size_t>(flat));
        const auto annotate = [&] { return "sweep failed at grid point " + describe_point(axes, idx) + ": "; };
        try {
            EventSpec e = point_spec(spec, axes, idx);
            e.snr_db = spec.snr_db;
            e.seed = mix_seed(spec.seed, static_cast<std::uint64_t>(flat));
            const VoltageRecord rec = synthesize(e);
            const auto dist = band_energies(
                dwt_decompose(rec, spec.wavelet, depth, BoundaryMode::Periodic, Execution::Serial),
                spec.fs);
            SweepPoint& p = result.points[static_cast<std::size_t>(flat)];
            p.alpha = e.alpha;
            p.duration_cycles = e.duration_cycles;
            p.beta = e.beta;
            p.gamma = e.gamma;
            p.eni = eni(dist, reference, spec.p);
            if (spec.compute_wni) p.wni = wni(dist, reference, profile, spec.p);
            if (spec.compute_lni) p.lni = lni(dist, reference, spec.p);
        } catch (const ValidationError& e) {
            record_failure(std::make_exception_ptr(ValidationError(annotate() + e.what())));
        } catch (const NumericalError& e) {
            record_failure(std::make_exception_ptr(NumericalError(annotate() + e.what())));
        } catch (const Error& e) {
            record_failure(std::make_exception_ptr(Error(annotate() + e.what())));
        }
    }
    if (failure) std::rethrow_exception(failure);

    // Adjacent-pair monotonicity along each axis, the other axes fixed.
    std::vector<std::size_t> strides(result.shape.size(), 1);
    for (std::size_t a = result.shape.size(); a-- > 1;) {
        strides[a - 1] = strides[a] * result.shape[a];
    }
    for (std::size_t a = 0; a < result.shape.size(); ++a) {
        AxisVerdict verdict;
        verdict.axis = axes.names[a];
        for (std::size_t flat = 0; flat < total; ++flat) {
            const std::size_t pos = (flat / strides[a]) % result.shape[a];
            if (pos + 1 >= result.shape[a]) continue;
            const SweepPoint& cur = result.points[flat];
            const SweepPoint& next = result.points[flat + strides[a]];
            ++verdict.comparisons;
            if (next.eni < cur.eni - kMonotoneEps) {
                ++verdict.violations;
                verdict.max_violation = std::max(verdict.max_violation, cur.eni - next.eni);
            }
            if (cur.wni && next.wni && *next.wni < *cur.wni - kMonotoneEps) {
                ++verdict.wni_violations;
                verdict.wni_max_violation =
                    std::max(verdict.wni_max_violation, *cur.wni - *next.wni);
            }
        }
        result.verdicts.push_back(verdict);
    }
    return result;
}

SimultaneousComparison simultaneous_scenario(const EventSpec& first, const EventSpec& second,
                                             const WaveletSpec& wavelet, double p) {
    for (const EventSpec* e : {&first, &second}) {
        if (e->kind != EventKind::SagWithTransient && e->kind != EventKind::SwellWithTransient) {
            throw ValidationError("simultaneous scenario requires simultaneous event kinds");
        }
    }
    if (first.fs != second.fs || first.f != second.f || first.n_cycles != second.n_cycles) {
        throw ValidationError("paired events must share fs, f and record length");
    }

    const int depth = decomposition_depth(first.fs, first.f);
    const EnergyDistribution& reference =
        nominal_reference(first.fs, first.f, first.n_cycles, wavelet, depth);
    const PreferenceProfile profile = transient_preference(depth);

    SimultaneousComparison cmp;
    cmp.first = first;
    cmp.second = second;
    IndexReport* reports[2] = {&cmp.report_first, &cmp.report_second};
    const EventSpec* specs[2] = {&first, &second};
    for (int i = 0; i < 2; ++i) {
        const auto dist = band_energies(dwt_decompose(synthesize(*specs[i]), wavelet, depth),
                                        specs[i]->fs);
        reports[i]->eni = eni(dist, reference, p);
        reports[i]->lni = lni(dist, reference, p);
        reports[i]->wni = wni(dist, reference, profile, p);
        reports[i]->p = p;
        reports[i]->wavelet = wavelet;
        reports[i]->depth = depth;
        reports[i]->weights = profile;
    }
    const auto order = [](double a, double b) { return a > b ? 1 : (a < b ? -1 : 0); };
    cmp.lni_order = order(*cmp.report_first.lni, *cmp.report_second.lni);
    cmp.wni_order = order(*cmp.report_first.wni, *cmp.report_second.wni);
    return cmp;
}

std::vector<WaveletSweep> wavelet_sensitivity(const SweepSpec& base,
                                              const std::vector<WaveletSpec>& wavelets) {
    for (const auto& w : wavelets) {
        if (!is_supported(w)) throw ValidationError("unsupported wavelet: " + w.name());
    }
    std::vector<WaveletSweep> out;
    out.reserve(wavelets.size());
    for (const auto& w : wavelets) {
        SweepSpec spec = base;
        spec.wavelet = w;
        WaveletSweep item;
        item.wavelet = w;
        item.result = run_sweep(spec);
        item.index_range = item.result.max_eni() - item.result.min_eni();
        out.push_back(std::move(item));
    }
    return out;
}

EstimatedParams estimate_sag_params(const VoltageRecord& record) {
    if (record.fs <= 0.0 || record.f <= 0.0) throw ValidationError("record needs fs and f");
    const auto half = static_cast<std::size_t>(std::llround(record.fs / (2.0 * record.f)));
    if (half < 2) throw ValidationError("sampling rate too low for half-cycle RMS");
    const std::size_t windows = record.size() / half;
    if (windows < 4) throw ValidationError("record shorter than two fundamental cycles");

    std::vector<double> rms(windows);
    for (std::size_t w = 0; w < windows; ++w) {
        double acc = 0.0;
        for (std::size_t k = w * half; k < (w + 1) * half; ++k) {
            acc += record.samples[k] * record.samples[k];
        }
        rms[w] = std::sqrt(acc / static_cast<double>(half));
    }

    const double nominal_rms = 1.0 / std::numbers::sqrt2;
    const double alpha = std::max(0.0, 1.0 - *std::min_element(rms.begin(), rms.end()) / nominal_rms);

    EstimatedParams est;
    est.alpha_pu = alpha;
    if (alpha < 0.05) {
        est.td_cycles = 0.0;
        return est;
    }
    // Fractional half-cycle count: each window contributes its estimated
    // in-sag coverage, recovered from rms^2 = r^2 (1 - phi * alpha(2-alpha)).
    const double depth_term = alpha * (2.0 - alpha) * nominal_rms * nominal_rms;
    double half_cycles = 0.0;
    for (double r : rms) {
        const double phi = (nominal_rms * nominal_rms - r * r) / depth_term;
        half_cycles += std::clamp(phi, 0.0, 1.0);
    }
    est.td_cycles = half_cycles / 2.0;
    return est;
}

EstimatedParams estimate_transient_params(const VoltageRecord& record) {
    if (record.fs <= 0.0 || record.f <= 0.0) throw ValidationError("record needs fs and f");
    const std::size_t n = record.size();
    if (n < static_cast<std::size_t>(2.0 * record.fs / record.f)) {
        throw ValidationError("record shorter than two fundamental cycles");
    }

    // Least-squares fundamental fit a sin + b cos, then work on the residual.
    const double omega = 2.0 * std::numbers::pi * record.f;
    double ss = 0.0, cc = 0.0, sc = 0.0, vs = 0.0, vc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / record.fs;
        const double s = std::sin(omega * t);
        const double c = std::cos(omega * t);
        ss += s * s;
        cc += c * c;
        sc += s * c;
        vs += record.samples[k] * s;
        vc += record.samples[k] * c;
    }
    const double det = ss * cc - sc * sc;
    if (std::abs(det) < 1e-12) throw NumericalError("fundamental fit is singular");
    const double a = (vs * cc - vc * sc) / det;
    const double b = (vc * ss - vs * sc) / det;

    std::vector<double> resid(n);
    double beta = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / record.fs;
        resid[k] = record.samples[k] - a * std::sin(omega * t) - b * std::cos(omega * t);
        beta = std::max(beta, std::abs(resid[k]));
    }
    if (beta < 0.2) throw DetectionFailure("no transient component above the noise floor");

    // Envelope by moving maximum over ~1.25 ms.
    const auto win = std::max<std::size_t>(3, static_cast<std::size_t>(std::llround(0.00125 * record.fs)));
    std::vector<double> env(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= win ? i - win : 0;
        const std::size_t hi = std::min(n, i + win + 1);
        double m = 0.0;
        for (std::size_t j = lo; j < hi; ++j) m = std::max(m, std::abs(resid[j]));
        env[i] = m;
    }

    const auto span_above = [&](double level) {
        std::size_t first = n, last = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (env[i] > level) {
                if (first == n) first = i;
                last = i;
            }
        }
        return std::pair{first, last};
    };

    const auto [d0, d1] = span_above(0.1 * beta);
    EstimatedParams est;
    est.beta_pu = beta;
    est.t_tr_ms = (static_cast<double>(d1 - d0) + 1.0) / record.fs * 1000.0;

    // Frequency from zero crossings over the strong part of the envelope,
    // where the oscillation dominates the noise.
    const auto [f0, f1] = span_above(0.3 * beta);
    std::size_t first_cross = 0, last_cross = 0, crossings = 0;
    for (std::size_t i = f0 + 1; i <= f1; ++i) {
        if ((resid[i - 1] < 0.0) != (resid[i] < 0.0)) {
            if (crossings == 0) first_cross = i;
            last_cross = i;
            ++crossings;
        }
    }
    if (crossings < 2) throw DetectionFailure("too few oscillations to estimate f_tr");
    est.f_tr_hz = static_cast<double>(crossings - 1) /
                  (2.0 * static_cast<double>(last_cross - first_cross) / record.fs);
    return est;
}

RideThrough asd_ride_through(double alpha, double td_cycles) {
    if (td_cycles <= 3.0) return RideThrough::Running;
    if (td_cycles <= 4.0) {
        return alpha <= 1.0 - 0.9 * (td_cycles - 3.0) ? RideThrough::Running
                                                      : RideThrough::Stopped;
    }
    return alpha <= 0.1 ? RideThrough::Running : RideThrough::Stopped;
}

std::vector<double> asd_default_alphas() {
    std::vector<double> v(101);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i) / 100.0;
    return v;
}

std::vector<double> asd_default_durations() {
    std::vector<double> v(121);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i) * 0.25;
    return v;
}

AsdStudy asd_contour_study(const std::vector<double>& alphas, const std::vector<double>& tds,
                           const WaveletSpec& wavelet, double p, Execution exec) {
    if (alphas.empty() || tds.empty()) throw ValidationError("ride-through grid is empty");
    for (double a : alphas) {
        if (a < 0.0 || a > 1.0) throw ValidationError("ride-through alpha grid must lie in [0, 1]");
    }
    for (double td : tds) {
        if (td < 0.0) throw ValidationError("ride-through duration grid must be non-negative");
    }

    constexpr double kFs = 10000.0;
    constexpr double kF = 50.0;
    constexpr double kCycles = 40.0;
    const int depth = decomposition_depth(kFs, kF);
    const EnergyDistribution& reference = nominal_reference(kFs, kF, kCycles, wavelet, depth);

    const auto eval = [&](double alpha, double td) {
        EventSpec e;
        e.kind = EventKind::Sag;
        e.alpha = alpha;
        e.duration_cycles = td;
        e.fs = kFs;
        e.f = kF;
        e.n_cycles = kCycles;
        const auto dist =
            band_energies(dwt_decompose(model::waveform(e), wavelet, depth,
                                        BoundaryMode::Periodic, Execution::Serial), kFs);
        return eni(dist, reference, p);
    };

    AsdStudy study;
    study.n_alpha = alphas.size();
    study.n_td = tds.size();
    study.points.resize(alphas.size() * tds.size());

    const bool parallel = exec == Execution::Parallel && study.points.size() > 1;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(study.points.size()); ++flat) {
        const std::size_t i = static_cast<std::size_t>(flat) / tds.size();
        const std::size_t j = static_cast<std::size_t>(flat) % tds.size();
        AsdPoint& pt = study.points[static_cast<std::size_t>(flat)];
        pt.alpha = alphas[i];
        pt.td_cycles = tds[j];
        pt.region = asd_ride_through(pt.alpha, pt.td_cycles);
        pt.eni = eval(pt.alpha, pt.td_cycles);
    }

    double stop_min = std::numeric_limits<double>::infinity();
    double run_max = 0.0;
    for (const auto& pt : study.points) {
        if (pt.region == RideThrough::Stopped) stop_min = std::min(stop_min, pt.eni);
        else run_max = std::max(run_max, pt.eni);
    }
    study.threshold_lo = std::isfinite(stop_min) ? stop_min : 0.0;
    study.max_running_eni = run_max;
    // The knee of the tolerance curve: the mildest full interruption that
    // outlasts the ramp. Severities above this only occur on stopped events
    // outside the sustained-tolerable strip.
    study.threshold_hi = eval(1.0, 4.0);
    study.eni_origin = eval(0.0, 0.0);
    study.eni_extreme = eval(1.0, 30.0);
    return study;
}

}  // namespace pqni
