#include "pqni/waveform_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pqni/errors.hpp"

namespace pqni {

namespace {

bool parse_double(std::string_view field, double& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    const auto is_delim = [](char c) { return c == ',' || c == ';' || c == '\t' || c == ' '; };
    while (i < line.size()) {
        while (i < line.size() && is_delim(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_delim(line[j])) ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

struct Sidecar {
    std::optional<double> fs, f, base_voltage;
};

Sidecar read_sidecar(const std::filesystem::path& path) {
    Sidecar meta;
    const auto sidecar_path = path.string() + ".meta.json";
    std::ifstream in(sidecar_path);
    if (!in) return meta;
    try {
        nlohmann::json j;
        in >> j;
        if (j.contains("fs")) meta.fs = j["fs"].get<double>();
        if (j.contains("f")) meta.f = j["f"].get<double>();
        if (j.contains("base_voltage")) meta.base_voltage = j["base_voltage"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("bad metadata sidecar " + sidecar_path + ": " + e.what());
    }
    return meta;
}

}  // namespace

VoltageRecord ingest(const std::filesystem::path& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    std::vector<double> col_time;
    std::vector<double> col_volt;
    std::size_t columns = 0;
    std::size_t line_no = 0;
    bool header_allowed = true;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        const auto fields = split_fields(line);
        if (fields.empty() || fields[0].front() == '#') continue;

        double v0 = 0.0, v1 = 0.0;
        const bool ok0 = parse_double(fields[0], v0);
        const bool ok1 = fields.size() > 1 ? parse_double(fields[1], v1) : true;
        if (!ok0 || !ok1) {
            if (header_allowed) {  // one optional header row
                header_allowed = false;
                continue;
            }
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": cannot parse value");
        }
        header_allowed = false;

        if (columns == 0) columns = std::min<std::size_t>(fields.size(), 2);
        if (std::min<std::size_t>(fields.size(), 2) != columns) {
            throw IoError(path.string() + ":" + std::to_string(line_no) +
                          ": inconsistent column count");
        }
        if (columns == 2) {
            col_time.push_back(v0);
            col_volt.push_back(v1);
        } else {
            col_volt.push_back(v0);
        }
    }
    if (col_volt.empty()) throw ValidationError(path.string() + ": no samples");

    const Sidecar meta = read_sidecar(path);

    double fs = 0.0;
    if (options.fs) {
        fs = *options.fs;
    } else if (meta.fs) {
        fs = *meta.fs;
    } else if (columns == 2) {
        fs = 0.0;  // derive below
    } else {
        throw ValidationError(path.string() + ": voltage-only file needs --fs or a sidecar");
    }

    if (columns == 2 && col_time.size() >= 2) {
        const double dt = (col_time.back() - col_time.front()) /
                          static_cast<double>(col_time.size() - 1);
        if (!(dt > 0.0)) throw ValidationError(path.string() + ": time column must increase");
        for (std::size_t i = 1; i < col_time.size(); ++i) {
            const double step = col_time[i] - col_time[i - 1];
            if (std::abs(step - dt) > 0.001 * dt) {
                throw ValidationError(path.string() + ": non-uniform sampling at row " +
                                      std::to_string(i + 1));
            }
        }
        if (fs == 0.0) fs = 1.0 / dt;
    }
    if (!(fs > 0.0)) throw ValidationError(path.string() + ": sampling frequency unresolved");

    VoltageRecord rec;
    rec.fs = fs;
    rec.f = options.f.value_or(meta.f.value_or(50.0));
    rec.samples = std::move(col_volt);

    double base;
    if (options.base_voltage) {
        base = *options.base_voltage;
    } else if (meta.base_voltage) {
        base = *meta.base_voltage;
    } else {
        // Peak of the assumed pre-event window.
        const auto win = std::min<std::size_t>(
            rec.samples.size(),
            static_cast<std::size_t>(std::llround(options.pu_window_cycles * fs / rec.f)));
        base = 0.0;
        for (std::size_t k = 0; k < win; ++k) base = std::max(base, std::abs(rec.samples[k]));
        if (base <= 0.0) {
            throw ValidationError(path.string() + ": pre-event window is identically zero; "
                                                  "pass an explicit base voltage");
        }
    }
    if (!(base > 0.0)) throw ValidationError("base voltage must be positive");
    for (double& v : rec.samples) v /= base;
    rec.base_voltage = base;
    return rec;
}

void write_waveform(const std::filesystem::path& path, const VoltageRecord& record,
                    bool write_sidecar) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "time,voltage\n";
    char buf[80];
    for (std::size_t k = 0; k < record.samples.size(); ++k) {
        const double t = static_cast<double>(k) / record.fs;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t, record.samples[k] * record.base_voltage);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path.string());
    if (write_sidecar) {
        nlohmann::json j;
        j["fs"] = record.fs;
        j["f"] = record.f;
        j["base_voltage"] = record.base_voltage;
        if (record.noise_seed) j["noise_seed"] = *record.noise_seed;
        std::ofstream meta(path.string() + ".meta.json");
        if (!meta) throw IoError("cannot write sidecar for " + path.string());
        meta << j.dump(2) << "\n";
    }
}

}  // namespace pqni
