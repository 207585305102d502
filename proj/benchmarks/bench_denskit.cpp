#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "denskit/compare.hpp"
#include "denskit/diffusion_kde.hpp"
#include "denskit/gaussian_kde.hpp"
#include "denskit/geo_data.hpp"
#include "denskit/grid.hpp"
#include "denskit/wasserstein.hpp"

using namespace denskit;

namespace {

std::vector<double> synthetic_values(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = -23.0 + 4.0 * std::sin(0.01 * static_cast<double>(i)) +
               1.5 * std::sin(0.37 * static_cast<double>(i));
    }
    return v;
}

}  // namespace

static void BM_BinSamples(benchmark::State& state) {
    const Sample1D sample{synthetic_values(static_cast<std::size_t>(state.range(0)))};
    const auto [lo, hi] = default_domain(sample.values());
    const Grid1D grid = make_grid(lo, hi, kDefaultGridIntervals);
    for (auto _ : state) {
        GridFunction f = bin_samples(sample, grid);
        benchmark::DoNotOptimize(f.y.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BinSamples)->RangeMultiplier(8)->Range(512, 1 << 16)->Complexity(benchmark::oN);

static void BM_GaussianKde(benchmark::State& state) {
    const Sample1D sample{synthetic_values(static_cast<std::size_t>(state.range(0)))};
    const auto [lo, hi] = default_domain(sample.values());
    const Grid1D grid = make_grid(lo, hi, kDefaultGridIntervals);
    const GaussianBandwidth bw = scott_bandwidth(sample);
    for (auto _ : state) {
        DensityEstimate est = gaussian_kde_evaluate(sample, grid, bw);
        benchmark::DoNotOptimize(est.y.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GaussianKde)->RangeMultiplier(4)->Range(256, 1 << 16)->Complexity(benchmark::oN);

static void BM_DiffusionSolve(benchmark::State& state) {
    const Sample1D sample{synthetic_values(2048)};
    const auto [lo, hi] = default_domain(sample.values());
    const Grid1D grid = make_grid(lo, hi, static_cast<std::size_t>(state.range(0)));
    const GridFunction u0 = bin_samples(sample, grid);
    const PilotDensity pilot = build_pilot(sample, grid);
    const SmoothingSchedule schedule = silverman_time(sample);
    for (auto _ : state) {
        DensityEstimate est = diffkde_solve(u0, pilot, schedule);
        benchmark::DoNotOptimize(est.y.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiffusionSolve)->RangeMultiplier(4)->Range(256, 1 << 14)->Complexity(benchmark::oN);

static void BM_Wasserstein1(benchmark::State& state) {
    const Sample1D a{synthetic_values(4096)};
    std::vector<double> shifted = synthetic_values(4096);
    for (double& v : shifted) v += 0.8;
    const Sample1D b{shifted};
    const Grid1D grid = make_grid(-30.0, -15.0, kDefaultGridIntervals);
    const DensityEstimate da = gaussian_kde_evaluate(a, grid, scott_bandwidth(a));
    const DensityEstimate db = gaussian_kde_evaluate(b, grid, scott_bandwidth(b));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wasserstein1(da, db));
    }
}
BENCHMARK(BM_Wasserstein1);

static void BM_FullComparison(benchmark::State& state) {
    const DepthTable& table = DepthTable::default_table();
    GeoDataset model{{}, DataSource::model};
    const auto n = static_cast<std::size_t>(state.range(0));
    model.records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int lat_q = static_cast<int>(i % 98) - 49;
        const int lon_q = static_cast<int>(i / 98) % 100;
        const auto depth_q = static_cast<std::size_t>(i / 9800);
        model.records.push_back({1.8 * lat_q, 3.6 * lon_q, table.levels()[depth_q], 1990,
                                 -23.0 + 4.0 * std::sin(0.01 * static_cast<double>(i))});
    }
    GeoDataset field{{}, DataSource::field};
    for (int i = 0; i < 300; ++i) {
        field.records.push_back({1.8 * ((i % 40) - 20), 3.6 * ((i * 7) % 100),
                                 (i < 200) ? 60.0 : 160.0, 1990,
                                 -24.0 + 3.0 * std::sin(0.1 * i)});
    }
    ScenarioConfig cfg;
    cfg.scenario = Scenario::full;
    cfg.decade = 1990;
    for (auto _ : state) {
        ComparisonReport report = run_comparison(model, field, cfg);
        benchmark::DoNotOptimize(report.results.data());
    }
}
BENCHMARK(BM_FullComparison)->Arg(6000)->Arg(60000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
