#ifndef PQNI_WAVEFORM_IO_HPP
#define PQNI_WAVEFORM_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "pqni/voltage_record.hpp"

namespace pqni {

/// Options for waveform ingestion. Values given here override the metadata
/// sidecar, which overrides the defaults.
struct IngestOptions {
    std::optional<double> fs;            // required for voltage-only files
    std::optional<double> base_voltage;  // absent: peak |v| of the pre-event window
    std::optional<double> f;             // fundamental, default 50 Hz
    double pu_window_cycles = 2.0;       // pre-event window for normalization
};

/// Reads a one-column (voltage) or two-column (time, voltage) delimited text
/// file and returns a per-unit record. Comma, semicolon, tab and space
/// delimiters are accepted; an optional non-numeric header row is skipped.
/// A sidecar `<path>.meta.json` may supply fs, f and base_voltage.
/// The time column must be uniform within 0.1% jitter.
VoltageRecord ingest(const std::filesystem::path& path, const IngestOptions& options = {});

/// Writes `record` as two-column (time, voltage) delimited text, voltage in
/// per-unit, plus a `<path>.meta.json` sidecar carrying fs, f and
/// base_voltage so that re-ingesting reproduces the samples.
void write_waveform(const std::filesystem::path& path, const VoltageRecord& record,
                    bool write_sidecar = true);

}  // namespace pqni

#endif
