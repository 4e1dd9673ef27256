#include "pqni/event.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pqni/errors.hpp"

namespace pqni {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

void validate_common(const EventSpec& spec) {
    require(spec.f > 0.0, "f must be positive");
    require(spec.fs > 0.0, "fs must be positive");
    require(spec.fs > 2.0 * spec.f, "fs must exceed 2*f (Nyquist)");
    require(spec.n_cycles > 0.0, "n_cycles must be positive");
    if (spec.snr_db) require(std::isfinite(*spec.snr_db), "snr_db must be finite");
}

void validate_gated(const EventSpec& spec) {
    const double T = 1.0 / spec.f;
    double td = spec.duration_cycles * T;
    if (spec.t1 && spec.t2) td = *spec.t2 - *spec.t1;
    switch (spec.kind) {
    case EventKind::Sag:
    case EventKind::SagWithTransient:
        if (spec.alpha == 0.0) return;  // degenerate: nominal fundamental
        require(spec.alpha >= 0.1 && spec.alpha <= 0.9,
                "alpha out of sag range [0.1, 0.9]");
        break;
    case EventKind::Swell:
    case EventKind::SwellWithTransient:
        if (spec.alpha == 0.0) return;
        require(spec.alpha >= 0.1 && spec.alpha <= 0.8,
                "alpha out of swell range [0.1, 0.8]");
        break;
    case EventKind::Interruption:
        require(spec.alpha > 0.9 && spec.alpha <= 1.0,
                "alpha out of interruption range (0.9, 1.0]");
        break;
    default:
        return;
    }
    require(td >= 0.5 * T && td <= 30.0 * T,
            "event duration t2 - t1 out of range [0.5T, 30T]");
}

void validate_transient(const EventSpec& spec) {
    require(spec.beta >= 1.0 && spec.beta <= 4.0, "beta out of transient range [1, 4]");
    require(spec.gamma >= -125.0 && spec.gamma <= -25.0,
            "gamma out of transient range [-125, -25]");
    require(spec.f_tr >= 400.0 && spec.f_tr <= 4000.0,
            "f_tr out of transient range [400, 4000] Hz");
    require(spec.fs > 2.0 * spec.f_tr, "fs must exceed 2*f_tr (Nyquist)");
}

std::size_t record_length(const EventSpec& spec) {
    return static_cast<std::size_t>(std::llround(spec.n_cycles * spec.fs / spec.f));
}

}  // namespace

std::string to_string(EventKind kind) {
    switch (kind) {
    case EventKind::Nominal: return "nominal";
    case EventKind::Sag: return "sag";
    case EventKind::Swell: return "swell";
    case EventKind::Interruption: return "interruption";
    case EventKind::OscTransient: return "transient";
    case EventKind::SagWithTransient: return "sag+transient";
    case EventKind::SwellWithTransient: return "swell+transient";
    }
    return "unknown";
}

EventKind event_kind_from_string(const std::string& name) {
    if (name == "nominal") return EventKind::Nominal;
    if (name == "sag") return EventKind::Sag;
    if (name == "swell") return EventKind::Swell;
    if (name == "interruption") return EventKind::Interruption;
    if (name == "transient") return EventKind::OscTransient;
    if (name == "sag+transient" || name == "sag-transient") return EventKind::SagWithTransient;
    if (name == "swell+transient" || name == "swell-transient") return EventKind::SwellWithTransient;
    throw ValidationError("unknown event kind: " + name);
}

EventSpec EventSpec::nominal() { return {}; }

EventSpec EventSpec::sag(double alpha, double duration_cycles) {
    EventSpec s;
    s.kind = EventKind::Sag;
    s.alpha = alpha;
    s.duration_cycles = duration_cycles;
    return s;
}

EventSpec EventSpec::swell(double alpha, double duration_cycles) {
    EventSpec s = sag(alpha, duration_cycles);
    s.kind = EventKind::Swell;
    return s;
}

EventSpec EventSpec::interruption(double alpha, double duration_cycles) {
    EventSpec s = sag(alpha, duration_cycles);
    s.kind = EventKind::Interruption;
    return s;
}

EventSpec EventSpec::osc_transient(double beta, double gamma, double f_tr) {
    EventSpec s;
    s.kind = EventKind::OscTransient;
    s.beta = beta;
    s.gamma = gamma;
    s.f_tr = f_tr;
    return s;
}

EventSpec EventSpec::sag_with_transient(double alpha, double duration_cycles, double beta,
                                        double gamma, double f_tr) {
    EventSpec s = sag(alpha, duration_cycles);
    s.kind = EventKind::SagWithTransient;
    s.beta = beta;
    s.gamma = gamma;
    s.f_tr = f_tr;
    return s;
}

EventSpec EventSpec::swell_with_transient(double alpha, double duration_cycles, double beta,
                                          double gamma, double f_tr) {
    EventSpec s = sag_with_transient(alpha, duration_cycles, beta, gamma, f_tr);
    s.kind = EventKind::SwellWithTransient;
    return s;
}

namespace model {

Gate resolve_gate(const EventSpec& spec) {
    const std::size_t n = record_length(spec);
    const double t_rec = spec.n_cycles / spec.f;

    double t1;
    double t2;
    if (spec.kind == EventKind::OscTransient) {
        // Standalone transient: inception defaults to 0.3 s, clamped into the
        // record; the oscillation rides to the end of the window.
        t1 = spec.t1.value_or(0.3);
        t1 = std::clamp(t1, 0.0, t_rec);
        t2 = t_rec;
    } else {
        const double td = spec.t1 && spec.t2 ? *spec.t2 - *spec.t1
                                             : spec.duration_cycles / spec.f;
        t1 = spec.t1.value_or(std::max(0.0, (t_rec - td) / 2.0));
        t2 = spec.t2.value_or(t1 + td);
    }

    const auto snap = [&](double t) {
        auto i = std::llround(t * spec.fs);
        return static_cast<std::size_t>(std::clamp<long long>(i, 0, static_cast<long long>(n)));
    };
    Gate g;
    g.i1 = snap(t1);
    g.i2 = std::max(g.i1, snap(t2));
    return g;
}

VoltageRecord waveform(const EventSpec& spec) {
    const std::size_t n = record_length(spec);
    const Gate gate = resolve_gate(spec);
    const double omega = kTwoPi * spec.f;
    const double omega_tr = kTwoPi * spec.f_tr;
    const double t1 = static_cast<double>(gate.i1) / spec.fs;

    double sign = 0.0;
    if (spec.kind == EventKind::Sag || spec.kind == EventKind::Interruption ||
        spec.kind == EventKind::SagWithTransient) {
        sign = -1.0;
    } else if (spec.kind == EventKind::Swell || spec.kind == EventKind::SwellWithTransient) {
        sign = 1.0;
    }

    VoltageRecord rec;
    rec.fs = spec.fs;
    rec.f = spec.f;
    rec.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / spec.fs;
        const bool in_gate = k >= gate.i1 && k < gate.i2;
        double v = (1.0 + (in_gate ? sign * spec.alpha : 0.0)) * std::sin(omega * t);
        if (spec.has_transient() && k >= gate.i1) {
            v += spec.beta * std::exp(spec.gamma * (t - t1)) * std::sin(omega_tr * t);
        }
        rec.samples[k] = v;
    }
    return rec;
}

}  // namespace model

VoltageRecord synthesize(const EventSpec& spec) {
    validate_common(spec);
    if (spec.has_gated_fundamental()) validate_gated(spec);
    if (spec.has_transient()) validate_transient(spec);
    require(record_length(spec) > 0, "record length is zero");

    VoltageRecord rec = model::waveform(spec);
    if (spec.snr_db) rec = add_awgn(rec, *spec.snr_db, spec.seed);
    return rec;
}

VoltageRecord add_awgn(const VoltageRecord& record, double snr_db, std::uint64_t seed) {
    if (record.samples.empty()) throw ValidationError("record is empty");
    if (!std::isfinite(snr_db)) throw ValidationError("snr_db must be finite");

    const double power = record.energy() / static_cast<double>(record.size());
    const double sigma = std::sqrt(power / std::pow(10.0, snr_db / 10.0));

    // Box-Muller on a 64-bit generator; std::normal_distribution is not
    // pinned across standard libraries, this is.
    std::mt19937_64 rng(seed);
    const auto uniform = [&rng] {
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    };

    VoltageRecord out = record;
    out.noise_seed = seed;
    bool have_spare = false;
    double spare = 0.0;
    for (double& v : out.samples) {
        double z;
        if (have_spare) {
            z = spare;
            have_spare = false;
        } else {
            const double r = std::sqrt(-2.0 * std::log(uniform()));
            const double phi = kTwoPi * uniform();
            z = r * std::cos(phi);
            spare = r * std::sin(phi);
            have_spare = true;
        }
        v += sigma * z;
    }
    return out;
}

}  // namespace pqni
