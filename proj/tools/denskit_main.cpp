#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "denskit/compare.hpp"
#include "denskit/diffusion_kde.hpp"
#include "denskit/errors.hpp"
#include "denskit/gaussian_kde.hpp"
#include "denskit/geo_data.hpp"
#include "report_io.hpp"

namespace fs = std::filesystem;
using namespace denskit;
using denskit::tools::format_g9;

namespace {

struct GridFlags {
    std::optional<double> lo;
    std::optional<double> hi;
    std::size_t points = kDefaultGridIntervals;
    double margin = kDefaultMarginFraction;
};

struct MethodFlags {
    std::string method = "both";

    bool diffusion() const { return method != "gauss"; }
    bool gaussian() const { return method != "diff"; }
};

// Flag sanity that must precede any file IO. make_grid performs the actual
// range/resolution checks; a dummy span stands in when the domain will come
// from the data.
void validate_grid_flags(const GridFlags& g) {
    if (g.lo.has_value() != g.hi.has_value()) {
        throw DomainEmptyError("--lo and --hi must be given together");
    }
    if (g.lo.has_value()) {
        make_grid(*g.lo, *g.hi, g.points);
    } else {
        make_grid(0.0, 1.0, g.points);
    }
    if (g.margin < 0.0) throw DomainEmptyError("--margin must be >= 0");
}

Grid1D grid_for_values(const GridFlags& g, std::span<const double> values) {
    if (g.lo.has_value()) return make_grid(*g.lo, *g.hi, g.points);
    const auto [lo, hi] = default_domain(values, g.margin);
    return make_grid(lo, hi, g.points);
}

DepthTable resolve_depth_table(const std::string& depth_table_path) {
    if (depth_table_path.empty()) return DepthTable::default_table();
    return load_depth_table(depth_table_path);
}

void print_region_summary(const SuiteEntry& entry) {
    std::cerr << "region " << region_name(entry.region) << ": ";
    if (!entry.ok()) {
        std::cerr << "failed (" << entry.error << ")\n";
        return;
    }
    const ComparisonReport& report = *entry.report;
    std::cerr << "n_model=" << report.n_model << " n_field=" << report.n_field;
    for (const auto& result : report.results) {
        std::cerr << " w1_"
                  << (result.method == EstimatorMethod::diffusion ? "diffusion" : "gaussian") << '='
                  << format_g9(result.w1);
    }
    std::cerr << '\n';
}

int run_estimate(const std::string& input, const MethodFlags& method, const GridFlags& gridflags,
                 const std::string& out) {
    validate_grid_flags(gridflags);
    const std::vector<double> values = tools::read_value_csv(input);
    const Sample1D sample{values};
    const Grid1D grid = grid_for_values(gridflags, sample.values());

    std::optional<DensityEstimate> diff;
    std::optional<DensityEstimate> gauss;
    std::cerr << "estimate: n=" << sample.n() << " domain=[" << format_g9(grid.lo) << ", "
              << format_g9(grid.hi) << "] intervals=" << grid.m << '\n';
    if (method.diffusion()) {
        const SmoothingSchedule schedule = silverman_time(sample);
        diff = diffkde(sample, grid);
        std::cerr << "diffusion: T=" << format_g9(schedule.final_time)
                  << " steps=" << schedule.steps
                  << " integral=" << format_g9(integrate(grid, diff->y)) << '\n';
    }
    if (method.gaussian()) {
        const GaussianBandwidth bw = scott_bandwidth(sample);
        gauss = gaussian_kde_evaluate(sample, grid, bw);
        std::cerr << "gaussian: t=" << format_g9(bw.t)
                  << " integral=" << format_g9(integrate(grid, gauss->y)) << '\n';
    }
    tools::write_estimate_csv(out, grid, diff ? &*diff : nullptr, gauss ? &*gauss : nullptr);
    return 0;
}

ScenarioConfig make_config(const std::string& scenario, const std::string& region, int decade,
                           const MethodFlags& method, const GridFlags& gridflags) {
    ScenarioConfig cfg;
    cfg.scenario = parse_scenario(scenario);
    cfg.region = parse_region(region);
    cfg.decade = decade;
    cfg.margin_fraction = gridflags.margin;
    cfg.grid_intervals = gridflags.points;
    if (gridflags.lo.has_value()) {
        cfg.grid_override = GridOverride{*gridflags.lo, *gridflags.hi, gridflags.points};
    }
    cfg.use_diffusion = method.diffusion();
    cfg.use_gaussian = method.gaussian();
    return cfg;
}

int run_compare(const std::string& model_path, const std::string& field_path,
                const std::string& scenario, const std::string& region, int decade,
                const MethodFlags& method, const GridFlags& gridflags,
                const std::string& depth_table_path, const std::string& out) {
    validate_grid_flags(gridflags);
    const ScenarioConfig cfg = make_config(scenario, region, decade, method, gridflags);
    const DepthTable table = resolve_depth_table(depth_table_path);
    const GeoDataset model = load_csv(model_path, DataSource::model);
    const GeoDataset field = load_csv(field_path, DataSource::field);

    const ComparisonReport report = run_comparison(model, field, cfg, table);
    tools::write_report_json(out + ".report.json", report);
    tools::write_curves_csv(out + ".curves.csv", report);
    print_region_summary(SuiteEntry{cfg.region, report, {}});
    return 0;
}

int run_suite_cmd(const std::string& model_path, const std::string& field_path,
                  const std::string& scenario, int decade, const MethodFlags& method,
                  const GridFlags& gridflags, const std::string& depth_table_path,
                  const std::string& out) {
    validate_grid_flags(gridflags);
    const ScenarioConfig base = make_config(scenario, "all", decade, method, gridflags);
    const DepthTable table = resolve_depth_table(depth_table_path);
    const GeoDataset model = load_csv(model_path, DataSource::model);
    const GeoDataset field = load_csv(field_path, DataSource::field);

    const std::vector<SuiteEntry> entries = run_suite(model, field, base, table);
    const fs::path out_dir{out};
    std::error_code ec;
    fs::create_directories(out_dir, ec);

    bool any_ok = false;
    for (const SuiteEntry& entry : entries) {
        print_region_summary(entry);
        if (!entry.ok()) continue;
        any_ok = true;
        const std::string stem = region_name(entry.region);
        tools::write_report_json(out_dir / (stem + ".report.json"), *entry.report);
        tools::write_curves_csv(out_dir / (stem + ".curves.csv"), *entry.report);
    }
    tools::write_suite_index(out_dir / "index.csv", entries);
    if (!any_ok) {
        std::cerr << "error: every region failed; see " << (out_dir / "index.csv").string()
                  << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"denskit: diffusion and Gaussian kernel density estimation with "
                 "Wasserstein model-data comparison"};
    app.require_subcommand(1);

    const auto method_check = CLI::IsMember({"diff", "gauss", "both"});
    const auto region_check = CLI::IsMember({"all", "euphotic", "euphotic-ex-so", "euphotic-so"});
    const auto scenario_check = CLI::IsMember({"masked", "full"});

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate the density of a value column");
    std::string est_input, est_out;
    MethodFlags est_method;
    GridFlags est_grid;
    est->add_option("--input", est_input, "CSV with a single 'value' column")->required();
    est->add_option("--method", est_method.method, "diff|gauss|both")
        ->default_val("both")
        ->check(method_check);
    auto* est_lo = est->add_option("--lo", est_grid.lo, "Domain lower bound (data units)");
    auto* est_hi = est->add_option("--hi", est_grid.hi, "Domain upper bound");
    est_lo->needs(est_hi);
    est_hi->needs(est_lo);
    est->add_option("--points", est_grid.points, "Grid intervals; curve has points+1 rows")
        ->default_val(kDefaultGridIntervals);
    est->add_option("--margin", est_grid.margin, "Domain padding as fraction of data range")
        ->default_val(kDefaultMarginFraction);
    est->add_option("--out", est_out, "Output curve CSV path")->required();

    // compare
    auto* cmp = app.add_subcommand("compare", "Compare model and field tracer data in one region");
    std::string cmp_model, cmp_field, cmp_scenario, cmp_region = "all", cmp_table, cmp_out;
    int cmp_decade = 0;
    MethodFlags cmp_method;
    GridFlags cmp_grid;
    cmp->add_option("--model", cmp_model, "Model tracer CSV (lat,lon,depth,decade,value)")
        ->required();
    cmp->add_option("--field", cmp_field, "Field tracer CSV (lat,lon,depth,decade,value)")
        ->required();
    cmp->add_option("--decade", cmp_decade, "Decade label, e.g. 1990 for the 1990s")->required();
    cmp->add_option("--scenario", cmp_scenario, "masked|full")->required()->check(scenario_check);
    cmp->add_option("--region", cmp_region, "all|euphotic|euphotic-ex-so|euphotic-so")
        ->default_val("all")
        ->check(region_check);
    cmp->add_option("--method", cmp_method.method, "diff|gauss|both")
        ->default_val("both")
        ->check(method_check);
    auto* cmp_lo = cmp->add_option("--lo", cmp_grid.lo, "Evaluation domain lower bound");
    auto* cmp_hi = cmp->add_option("--hi", cmp_grid.hi, "Evaluation domain upper bound");
    cmp_lo->needs(cmp_hi);
    cmp_hi->needs(cmp_lo);
    cmp->add_option("--points", cmp_grid.points, "Grid intervals")
        ->default_val(kDefaultGridIntervals);
    cmp->add_option("--margin", cmp_grid.margin, "Domain padding fraction")
        ->default_val(kDefaultMarginFraction);
    cmp->add_option("--depth-table", cmp_table, "File with one depth level (m) per line");
    cmp->add_option("--out", cmp_out, "Output prefix; writes <out>.report.json and <out>.curves.csv")
        ->required();

    // suite
    auto* sui = app.add_subcommand("suite", "Run the four regional test cases");
    std::string sui_model, sui_field, sui_scenario, sui_table, sui_out;
    int sui_decade = 0;
    MethodFlags sui_method;
    GridFlags sui_grid;
    sui->add_option("--model", sui_model, "Model tracer CSV (lat,lon,depth,decade,value)")
        ->required();
    sui->add_option("--field", sui_field, "Field tracer CSV (lat,lon,depth,decade,value)")
        ->required();
    sui->add_option("--decade", sui_decade, "Decade label, e.g. 1990 for the 1990s")->required();
    sui->add_option("--scenario", sui_scenario, "masked|full")->required()->check(scenario_check);
    sui->add_option("--method", sui_method.method, "diff|gauss|both")
        ->default_val("both")
        ->check(method_check);
    auto* sui_lo = sui->add_option("--lo", sui_grid.lo, "Evaluation domain lower bound");
    auto* sui_hi = sui->add_option("--hi", sui_grid.hi, "Evaluation domain upper bound");
    sui_lo->needs(sui_hi);
    sui_hi->needs(sui_lo);
    sui->add_option("--points", sui_grid.points, "Grid intervals")
        ->default_val(kDefaultGridIntervals);
    sui->add_option("--margin", sui_grid.margin, "Domain padding fraction")
        ->default_val(kDefaultMarginFraction);
    sui->add_option("--depth-table", sui_table, "File with one depth level (m) per line");
    sui->add_option("--out", sui_out, "Output directory for index.csv and per-region files")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (est->parsed()) return run_estimate(est_input, est_method, est_grid, est_out);
        if (cmp->parsed()) {
            return run_compare(cmp_model, cmp_field, cmp_scenario, cmp_region, cmp_decade,
                               cmp_method, cmp_grid, cmp_table, cmp_out);
        }
        return run_suite_cmd(sui_model, sui_field, sui_scenario, sui_decade, sui_method, sui_grid,
                             sui_table, sui_out);
    } catch (const DomainEmptyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResolutionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
