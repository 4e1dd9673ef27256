#ifndef PQNI_REPORT_IO_HPP
#define PQNI_REPORT_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pqni/harness.hpp"

namespace pqni {

enum class OutputFormat { Csv, Json, Text };

OutputFormat output_format_from_string(const std::string& name);

/// Repeated runs with identical inputs produce bit-identical files.
void write_index_report(std::ostream& out, const IndexReport& report, OutputFormat format);
void write_sweep(std::ostream& out, const SweepResult& result, OutputFormat format);
void write_simultaneous(std::ostream& out, const SimultaneousComparison& cmp, OutputFormat format);
void write_asd(std::ostream& out, const AsdStudy& study, OutputFormat format);
void write_sensitivity_summary(std::ostream& out, const std::vector<WaveletSweep>& sweeps,
                               OutputFormat format);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace pqni

#endif
