#include "report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "denskit/errors.hpp"

namespace denskit::tools {

namespace {

using ordered_json = nlohmann::ordered_json;

// Forces a double through the 9-significant-digit format so JSON output
// carries the same precision as the CSV files.
double round9(double v) {
    return std::strtod(format_g9(v).c_str(), nullptr);
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

const EstimatorComparison* find_result(const ComparisonReport& report, EstimatorMethod method) {
    for (const auto& r : report.results) {
        if (r.method == method) return &r;
    }
    return nullptr;
}

ordered_json curve_diag_json(const CurveDiagnostics& diag, const DensityEstimate& est) {
    ordered_json j;
    j["smoothing"] = round9(diag.smoothing);
    j["raw_mass"] = round9(diag.raw_mass);
    j["n"] = est.sample_count;
    return j;
}

}  // namespace

std::string format_g9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<double> read_value_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "value") {
        throw ParseError(path.string() + ": expected header 'value', got '" + line + "'");
    }
    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        char* end = nullptr;
        const double v = std::strtod(line.c_str(), &end);
        if (end == line.c_str() || *end != '\0' || !std::isfinite(v)) {
            throw ParseError(path.string() + ": row " + std::to_string(row) +
                             ": not a finite number: '" + line + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) throw EmptyResultError(path.string() + ": no data rows");
    return values;
}

void write_estimate_csv(const std::filesystem::path& path, const Grid1D& grid,
                        const DensityEstimate* diffusion, const DensityEstimate* gaussian) {
    std::ofstream out = open_out(path);
    out << "x";
    if (diffusion != nullptr) out << ",density_diff";
    if (gaussian != nullptr) out << ",density_gauss";
    out << '\n';
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
        out << format_g9(grid.node(i));
        if (diffusion != nullptr) out << ',' << format_g9(diffusion->y[i]);
        if (gaussian != nullptr) out << ',' << format_g9(gaussian->y[i]);
        out << '\n';
    }
}

void write_report_json(const std::filesystem::path& path, const ComparisonReport& report) {
    const EstimatorComparison* diff = find_result(report, EstimatorMethod::diffusion);
    const EstimatorComparison* gauss = find_result(report, EstimatorMethod::gaussian);

    ordered_json j;
    j["scenario"] = scenario_name(report.config.scenario);
    j["region"] = region_name(report.config.region);
    j["decade"] = report.config.decade;
    ordered_json estimators = ordered_json::array();
    if (diff != nullptr) estimators.push_back("diffusion");
    if (gauss != nullptr) estimators.push_back("gaussian");
    j["estimators"] = std::move(estimators);
    j["n_model"] = report.n_model;
    j["n_field"] = report.n_field;
    j["domain"] = {{"lo", round9(report.lo)},
                   {"hi", round9(report.hi)},
                   {"intervals", report.grid_intervals}};
    j["margin_fraction"] = round9(report.config.margin_fraction);

    ordered_json errors;
    if (diff != nullptr) errors["diffusion"] = round9(diff->w1);
    if (gauss != nullptr) errors["gaussian"] = round9(gauss->w1);
    j["errors"] = std::move(errors);

    ordered_json diagnostics;
    if (diff != nullptr) {
        diagnostics["diffusion"] = {{"model", curve_diag_json(diff->model_diag, diff->model)},
                                    {"field", curve_diag_json(diff->field_diag, diff->field)}};
    }
    if (gauss != nullptr) {
        diagnostics["gaussian"] = {{"model", curve_diag_json(gauss->model_diag, gauss->model)},
                                   {"field", curve_diag_json(gauss->field_diag, gauss->field)}};
    }
    j["diagnostics"] = std::move(diagnostics);

    const auto curve_array = [](const std::vector<double>& y) {
        ordered_json arr = ordered_json::array();
        for (double v : y) arr.push_back(round9(v));
        return arr;
    };
    ordered_json curves;
    ordered_json xs = ordered_json::array();
    const Grid1D grid{report.lo, report.hi, report.grid_intervals,
                      (report.hi - report.lo) / static_cast<double>(report.grid_intervals)};
    for (std::size_t i = 0; i < grid.node_count(); ++i) xs.push_back(round9(grid.node(i)));
    curves["x"] = std::move(xs);
    if (diff != nullptr) {
        curves["model_diffusion"] = curve_array(diff->model.y);
        curves["field_diffusion"] = curve_array(diff->field.y);
    }
    if (gauss != nullptr) {
        curves["model_gaussian"] = curve_array(gauss->model.y);
        curves["field_gaussian"] = curve_array(gauss->field.y);
    }
    j["curves"] = std::move(curves);

    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_curves_csv(const std::filesystem::path& path, const ComparisonReport& report) {
    const EstimatorComparison* diff = find_result(report, EstimatorMethod::diffusion);
    const EstimatorComparison* gauss = find_result(report, EstimatorMethod::gaussian);

    std::ofstream out = open_out(path);
    out << "x";
    if (diff != nullptr) out << ",model_diff,field_diff";
    if (gauss != nullptr) out << ",model_gauss,field_gauss";
    out << '\n';
    const Grid1D grid{report.lo, report.hi, report.grid_intervals,
                      (report.hi - report.lo) / static_cast<double>(report.grid_intervals)};
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
        out << format_g9(grid.node(i));
        if (diff != nullptr) {
            out << ',' << format_g9(diff->model.y[i]) << ',' << format_g9(diff->field.y[i]);
        }
        if (gauss != nullptr) {
            out << ',' << format_g9(gauss->model.y[i]) << ',' << format_g9(gauss->field.y[i]);
        }
        out << '\n';
    }
}

void write_suite_index(const std::filesystem::path& path,
                       const std::vector<SuiteEntry>& entries) {
    std::ofstream out = open_out(path);
    out << "region,status,n_model,n_field,w1_diffusion,w1_gaussian\n";
    for (const SuiteEntry& entry : entries) {
        out << region_name(entry.region) << ',';
        if (entry.ok()) {
            const ComparisonReport& report = *entry.report;
            const EstimatorComparison* diff = find_result(report, EstimatorMethod::diffusion);
            const EstimatorComparison* gauss = find_result(report, EstimatorMethod::gaussian);
            out << "ok," << report.n_model << ',' << report.n_field << ','
                << (diff != nullptr ? format_g9(diff->w1) : std::string{}) << ','
                << (gauss != nullptr ? format_g9(gauss->w1) : std::string{});
        } else {
            out << csv_escape(entry.error) << ",,,,";
        }
        out << '\n';
    }
}

}  // namespace denskit::tools
