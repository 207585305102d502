#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "denskit/gaussian_kde.hpp"
#include "denskit/geo_data.hpp"
#include "denskit/grid.hpp"

namespace denskit {

/// masked: restrict both datasets to cells where both have values, which
/// makes the samples equal-sized. full: compare everything that is there.
enum class Scenario { masked, full };

const char* scenario_name(Scenario s);
Scenario parse_scenario(const std::string& name);

struct GridOverride {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t m = kDefaultGridIntervals;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::masked;
    RegionFilter region = RegionFilter::all;
    int decade = 1990;
    std::optional<GridOverride> grid_override;
    std::size_t grid_intervals = kDefaultGridIntervals;
    double margin_fraction = kDefaultMarginFraction;
    bool use_diffusion = true;
    bool use_gaussian = true;
};

struct CurveDiagnostics {
    double smoothing = 0.0;  // t or T of the curve
    double raw_mass = 0.0;   // trapezoidal integral before renormalization
};

/// Model and field curves of one estimator plus their Wasserstein-1 error.
struct EstimatorComparison {
    EstimatorMethod method = EstimatorMethod::diffusion;
    DensityEstimate model;
    DensityEstimate field;
    double w1 = 0.0;
    CurveDiagnostics model_diag;
    CurveDiagnostics field_diag;
};

struct ComparisonReport {
    ScenarioConfig config;
    std::size_t n_model = 0;
    std::size_t n_field = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t grid_intervals = 0;
    /// Fixed order: diffusion first, then gaussian (whichever are requested).
    std::vector<EstimatorComparison> results;
};

/// Runs one scenario: decade averaging, region filter, optional masking,
/// then both estimators on a shared evaluation grid spanning the union of
/// the two samples, and the Wasserstein-1 error per estimator.
ComparisonReport run_comparison(const GeoDataset& model, const GeoDataset& field,
                                const ScenarioConfig& cfg,
                                const DepthTable& table = DepthTable::default_table());

/// One row of a regional suite; exactly one of report/error is meaningful.
struct SuiteEntry {
    RegionFilter region = RegionFilter::all;
    std::optional<ComparisonReport> report;
    std::string error;

    bool ok() const { return report.has_value(); }
};

/// Runs the four regional test cases in fixed order (all, euphotic,
/// euphotic-ex-so, euphotic-so) with base.region overridden per case. A
/// failing region is recorded as an error entry; the others still run.
std::vector<SuiteEntry> run_suite(const GeoDataset& model, const GeoDataset& field,
                                  const ScenarioConfig& base,
                                  const DepthTable& table = DepthTable::default_table());

}  // namespace denskit
