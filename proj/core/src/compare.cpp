#include "denskit/compare.hpp"

#include <string>

#include "denskit/diffusion_kde.hpp"
#include "denskit/errors.hpp"
#include "denskit/wasserstein.hpp"

namespace denskit {

const char* scenario_name(Scenario s) {
    return s == Scenario::masked ? "masked" : "full";
}

Scenario parse_scenario(const std::string& name) {
    if (name == "masked") return Scenario::masked;
    if (name == "full") return Scenario::full;
    throw Error("unknown scenario '" + name + "' (expected masked|full)");
}

namespace {

EstimatorComparison compare_one(EstimatorMethod method, const Sample1D& model_sample,
                                const Sample1D& field_sample, const Grid1D& grid) {
    EstimatorComparison out;
    out.method = method;
    if (method == EstimatorMethod::diffusion) {
        out.model = diffkde(model_sample, grid);
        out.field = diffkde(field_sample, grid);
    } else {
        out.model = gaussian_kde_evaluate(model_sample, grid, scott_bandwidth(model_sample));
        out.field = gaussian_kde_evaluate(field_sample, grid, scott_bandwidth(field_sample));
    }
    out.w1 = wasserstein1(out.model, out.field);
    out.model_diag = {out.model.smoothing, integrate(grid, out.model.y)};
    out.field_diag = {out.field.smoothing, integrate(grid, out.field.y)};
    return out;
}

}  // namespace

ComparisonReport run_comparison(const GeoDataset& model, const GeoDataset& field,
                                const ScenarioConfig& cfg, const DepthTable& table) {
    if (!cfg.use_diffusion && !cfg.use_gaussian) throw Error("no estimator requested");

    GeoDataset model_sel = apply_region(decade_mean(model, cfg.decade, table), cfg.region);
    GeoDataset field_sel = apply_region(decade_mean(field, cfg.decade, table), cfg.region);
    if (cfg.scenario == Scenario::masked) {
        auto masked = mask_common(model_sel, field_sel, table);
        model_sel = std::move(masked.first);
        field_sel = std::move(masked.second);
    }

    const Sample1D model_sample = extract_values(model_sel, table);
    const Sample1D field_sample = extract_values(field_sel, table);
    if (model_sample.n() < 2 || field_sample.n() < 2) {
        throw InsufficientDataError("estimation needs n >= 2 (model n = " +
                                    std::to_string(model_sample.n()) + ", field n = " +
                                    std::to_string(field_sample.n()) + ")");
    }

    Grid1D grid;
    if (cfg.grid_override.has_value()) {
        grid = make_grid(cfg.grid_override->lo, cfg.grid_override->hi, cfg.grid_override->m);
    } else {
        std::vector<double> pooled(model_sample.values().begin(), model_sample.values().end());
        pooled.insert(pooled.end(), field_sample.values().begin(), field_sample.values().end());
        const auto [lo, hi] = default_domain(pooled, cfg.margin_fraction);
        grid = make_grid(lo, hi, cfg.grid_intervals);
    }

    ComparisonReport report;
    report.config = cfg;
    report.n_model = model_sample.n();
    report.n_field = field_sample.n();
    report.lo = grid.lo;
    report.hi = grid.hi;
    report.grid_intervals = grid.m;
    if (cfg.use_diffusion) {
        report.results.push_back(
            compare_one(EstimatorMethod::diffusion, model_sample, field_sample, grid));
    }
    if (cfg.use_gaussian) {
        report.results.push_back(
            compare_one(EstimatorMethod::gaussian, model_sample, field_sample, grid));
    }
    return report;
}

std::vector<SuiteEntry> run_suite(const GeoDataset& model, const GeoDataset& field,
                                  const ScenarioConfig& base, const DepthTable& table) {
    static constexpr RegionFilter kSuiteOrder[] = {
        RegionFilter::all, RegionFilter::euphotic, RegionFilter::euphotic_ex_so,
        RegionFilter::euphotic_so};

    std::vector<SuiteEntry> entries;
    entries.reserve(4);
    for (RegionFilter region : kSuiteOrder) {
        ScenarioConfig cfg = base;
        cfg.region = region;
        SuiteEntry entry;
        entry.region = region;
        try {
            entry.report = run_comparison(model, field, cfg, table);
        } catch (const Error& e) {
            entry.error = e.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace denskit
