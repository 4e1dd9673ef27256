#ifndef PQNI_EVENT_HPP
#define PQNI_EVENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pqni/voltage_record.hpp"

namespace pqni {

enum class EventKind {
    Nominal,
    Sag,
    Swell,
    Interruption,
    OscTransient,
    SagWithTransient,
    SwellWithTransient,
};

std::string to_string(EventKind kind);
EventKind event_kind_from_string(const std::string& name);

/// Parametric description of one synthetic PQ event.
///
/// The gated kinds (sag/swell/interruption and the simultaneous events) run
/// from t1 to t2; when t1 is not given the event is centred in the record.
/// A transient component starts at the same t1 (standalone transients default
/// to t1 = 0.3 s, clamped into the record) and decays as beta * exp(gamma *
/// (t - t1)) on top of the fundamental. Fields irrelevant to `kind` are
/// ignored and never validated.
struct EventSpec {
    EventKind kind = EventKind::Nominal;

    double alpha = 0.0;            // magnitude deviation, pu
    std::optional<double> t1;      // event start, seconds
    std::optional<double> t2;      // event end, seconds
    double duration_cycles = 0.0;  // used when t1/t2 absent

    double beta = 0.0;             // transient peak, pu
    double gamma = 0.0;            // transient decay constant, 1/s (negative)
    double f_tr = 0.0;             // transient frequency, Hz

    double f = 50.0;               // fundamental, Hz
    double fs = 10000.0;           // sampling frequency, Hz
    double n_cycles = 40.0;        // record length in fundamental cycles

    std::optional<double> snr_db;  // absent => noiseless
    std::uint64_t seed = 0;

    static EventSpec nominal();
    static EventSpec sag(double alpha, double duration_cycles);
    static EventSpec swell(double alpha, double duration_cycles);
    static EventSpec interruption(double alpha, double duration_cycles);
    static EventSpec osc_transient(double beta, double gamma, double f_tr);
    static EventSpec sag_with_transient(double alpha, double duration_cycles,
                                        double beta, double gamma, double f_tr);
    static EventSpec swell_with_transient(double alpha, double duration_cycles,
                                          double beta, double gamma, double f_tr);

    bool has_transient() const {
        return kind == EventKind::OscTransient || kind == EventKind::SagWithTransient ||
               kind == EventKind::SwellWithTransient;
    }
    bool has_gated_fundamental() const {
        return kind == EventKind::Sag || kind == EventKind::Swell ||
               kind == EventKind::Interruption || kind == EventKind::SagWithTransient ||
               kind == EventKind::SwellWithTransient;
    }
};

/// Validates `spec` against its kind's parameter ranges and returns the
/// synthesized record, with AWGN applied when snr_db is present.
/// alpha == 0 on a gated kind is accepted as the degenerate nominal case.
VoltageRecord synthesize(const EventSpec& spec);

/// Adds zero-mean white Gaussian noise with power = signal power / 10^(snr/10).
/// Deterministic for a fixed seed.
VoltageRecord add_awgn(const VoltageRecord& record, double snr_db, std::uint64_t seed);

namespace model {
/// Evaluates the parametric waveform without range validation and without
/// noise. Used by the harness for grids that leave the tabulated event
/// ranges (e.g. the ride-through study spans alpha in [0, 1]).
VoltageRecord waveform(const EventSpec& spec);

/// Resolved gate instants after defaulting and snapping to the sample grid.
struct Gate {
    std::size_t i1 = 0;  // first in-event sample
    std::size_t i2 = 0;  // one past the last in-event sample
};
Gate resolve_gate(const EventSpec& spec);
}  // namespace model

}  // namespace pqni

#endif
