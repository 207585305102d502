#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "denskit/compare.hpp"
#include "denskit/gaussian_kde.hpp"

namespace denskit::tools {

/// Fixed output formatting: 9 significant digits, shortest form.
std::string format_g9(double v);

/// Reads a single-column CSV with header 'value'.
std::vector<double> read_value_csv(const std::filesystem::path& path);

/// Curve table for the estimate subcommand: x,density_diff,density_gauss
/// with absent columns omitted.
void write_estimate_csv(const std::filesystem::path& path, const Grid1D& grid,
                        const DensityEstimate* diffusion, const DensityEstimate* gaussian);

/// Self-contained comparison report (config echo, counts, errors,
/// diagnostics and the curves) as JSON with stable key order.
void write_report_json(const std::filesystem::path& path, const ComparisonReport& report);

/// Plotting companion: x,model_diff,field_diff,model_gauss,field_gauss with
/// absent columns omitted.
void write_curves_csv(const std::filesystem::path& path, const ComparisonReport& report);

/// Four-row suite summary: region,status,n_model,n_field,w1_diffusion,w1_gaussian.
void write_suite_index(const std::filesystem::path& path, const std::vector<SuiteEntry>& entries);

}  // namespace denskit::tools
