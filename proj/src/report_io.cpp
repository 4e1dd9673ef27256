#include "pqni/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "pqni/errors.hpp"

namespace pqni {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

nlohmann::json report_json(const IndexReport& r) {
    nlohmann::json j;
    j["eni_pct"] = r.eni;
    if (r.wni) j["wni_pct"] = *r.wni;
    if (r.lni) j["lni_pct"] = *r.lni;
    j["p"] = r.p;
    j["wavelet"] = r.wavelet.name();
    j["depth"] = r.depth;
    if (r.weights) {
        j["preference"] = {{"rankings", r.weights->rankings},
                           {"intensity", r.weights->intensity},
                           {"weights", r.weights->weights}};
    }
    return j;
}

const char* region_name(RideThrough r) {
    return r == RideThrough::Running ? "running" : "stopped";
}

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "text") return OutputFormat::Text;
    throw ValidationError("unknown output format: " + name);
}

void write_index_report(std::ostream& out, const IndexReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        out << report_json(report).dump(2) << "\n";
        return;
    case OutputFormat::Csv:
        out << "metric,value\n";
        out << "eni_pct," << num(report.eni) << "\n";
        if (report.wni) out << "wni_pct," << num(*report.wni) << "\n";
        if (report.lni) out << "lni_pct," << num(*report.lni) << "\n";
        out << "p," << num(report.p) << "\n";
        out << "wavelet," << report.wavelet.name() << "\n";
        out << "depth," << report.depth << "\n";
        return;
    case OutputFormat::Text:
        out << "ENI = " << num(report.eni) << " %\n";
        if (report.lni) out << "LNI = " << num(*report.lni) << " %\n";
        if (report.wni) out << "WNI = " << num(*report.wni) << " %\n";
        out << "(p = " << num(report.p) << ", wavelet = " << report.wavelet.name()
            << ", D = " << report.depth << ")\n";
        return;
    }
}

void write_sweep(std::ostream& out, const SweepResult& result, OutputFormat format) {
    const bool has_wni = result.spec.compute_wni;
    const bool has_lni = result.spec.compute_lni;
    if (format == OutputFormat::Json) {
        nlohmann::json j;
        j["kind"] = to_string(result.spec.kind);
        j["wavelet"] = result.spec.wavelet.name();
        j["p"] = result.spec.p;
        if (result.spec.snr_db) j["snr_db"] = *result.spec.snr_db;
        j["seed"] = result.spec.seed;
        j["axes"] = result.axes;
        j["shape"] = result.shape;
        auto& pts = j["points"] = nlohmann::json::array();
        for (const auto& p : result.points) {
            nlohmann::json row;
            row["alpha"] = p.alpha;
            row["td_cycles"] = p.duration_cycles;
            row["beta"] = p.beta;
            row["gamma"] = p.gamma;
            row["eni_pct"] = p.eni;
            if (p.wni) row["wni_pct"] = *p.wni;
            if (p.lni) row["lni_pct"] = *p.lni;
            pts.push_back(std::move(row));
        }
        auto& verdicts = j["monotonicity"] = nlohmann::json::array();
        for (const auto& v : result.verdicts) {
            verdicts.push_back({{"axis", v.axis},
                                {"comparisons", v.comparisons},
                                {"violations", v.violations},
                                {"max_violation", v.max_violation},
                                {"wni_violations", v.wni_violations},
                                {"wni_max_violation", v.wni_max_violation}});
        }
        out << j.dump(2) << "\n";
        return;
    }
    // CSV (text falls back to CSV for tabular data)
    out << "alpha,td_cycles,beta,gamma,eni_pct";
    if (has_lni) out << ",lni_pct";
    if (has_wni) out << ",wni_pct";
    out << "\n";
    for (const auto& p : result.points) {
        out << num(p.alpha) << "," << num(p.duration_cycles) << "," << num(p.beta) << ","
            << num(p.gamma) << "," << num(p.eni);
        if (has_lni) out << "," << (p.lni ? num(*p.lni) : "");
        if (has_wni) out << "," << (p.wni ? num(*p.wni) : "");
        out << "\n";
    }
}

void write_simultaneous(std::ostream& out, const SimultaneousComparison& cmp,
                        OutputFormat format) {
    const auto row = [](const EventSpec& e, const IndexReport& r) {
        nlohmann::json j;
        j["alpha"] = e.alpha;
        j["td_cycles"] = e.duration_cycles;
        j["beta"] = e.beta;
        j["gamma"] = e.gamma;
        j["f_tr"] = e.f_tr;
        j["eni_pct"] = r.eni;
        j["lni_pct"] = *r.lni;
        j["wni_pct"] = *r.wni;
        return j;
    };
    const auto order_text = [](int o, const char* index) {
        return o == 0 ? std::string(index) + "1 = " + index + "2"
               : o > 0 ? std::string(index) + "1 > " + index + "2"
                       : std::string(index) + "1 < " + index + "2";
    };
    if (format == OutputFormat::Json) {
        nlohmann::json j;
        j["events"] = {row(cmp.first, cmp.report_first), row(cmp.second, cmp.report_second)};
        j["lni_order"] = order_text(cmp.lni_order, "LNI");
        j["wni_order"] = order_text(cmp.wni_order, "WNI");
        out << j.dump(2) << "\n";
        return;
    }
    out << "event,alpha,td_cycles,beta,gamma,f_tr,eni_pct,lni_pct,wni_pct\n";
    const IndexReport* reports[2] = {&cmp.report_first, &cmp.report_second};
    const EventSpec* specs[2] = {&cmp.first, &cmp.second};
    for (int i = 0; i < 2; ++i) {
        out << (i + 1) << "," << num(specs[i]->alpha) << "," << num(specs[i]->duration_cycles)
            << "," << num(specs[i]->beta) << "," << num(specs[i]->gamma) << ","
            << num(specs[i]->f_tr) << "," << num(reports[i]->eni) << ","
            << num(*reports[i]->lni) << "," << num(*reports[i]->wni) << "\n";
    }
    out << "# " << order_text(cmp.lni_order, "LNI") << "; " << order_text(cmp.wni_order, "WNI")
        << "\n";
}

void write_asd(std::ostream& out, const AsdStudy& study, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::json j;
        j["threshold_lo_pct"] = study.threshold_lo;
        j["threshold_hi_pct"] = study.threshold_hi;
        j["max_running_eni_pct"] = study.max_running_eni;
        j["eni_origin_pct"] = study.eni_origin;
        j["eni_extreme_pct"] = study.eni_extreme;
        auto& pts = j["points"] = nlohmann::json::array();
        for (const auto& p : study.points) {
            pts.push_back({{"alpha", p.alpha},
                           {"td_cycles", p.td_cycles},
                           {"eni_pct", p.eni},
                           {"region", region_name(p.region)}});
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "alpha,td_cycles,eni_pct,region\n";
    for (const auto& p : study.points) {
        out << num(p.alpha) << "," << num(p.td_cycles) << "," << num(p.eni) << ","
            << region_name(p.region) << "\n";
    }
    out << "# threshold_lo=" << num(study.threshold_lo)
        << " threshold_hi=" << num(study.threshold_hi)
        << " max_running=" << num(study.max_running_eni) << "\n";
}

void write_sensitivity_summary(std::ostream& out, const std::vector<WaveletSweep>& sweeps,
                               OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : sweeps) {
            j.push_back({{"wavelet", s.wavelet.name()},
                         {"min_eni_pct", s.result.min_eni()},
                         {"max_eni_pct", s.result.max_eni()},
                         {"index_range_pct", s.index_range},
                         {"violations", s.result.total_violations()}});
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "wavelet,min_eni_pct,max_eni_pct,index_range_pct,violations\n";
    for (const auto& s : sweeps) {
        out << s.wavelet.name() << "," << num(s.result.min_eni()) << ","
            << num(s.result.max_eni()) << "," << num(s.index_range) << ","
            << s.result.total_violations() << "\n";
    }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << contents;
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace pqni
