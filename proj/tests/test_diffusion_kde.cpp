#include <doctest.h>

#include <cmath>
#include <vector>

#include "denskit/diffusion_kde.hpp"
#include "denskit/errors.hpp"
#include "denskit/gaussian_kde.hpp"
#include "denskit/grid.hpp"
#include "support/synthetic.hpp"

using namespace denskit;

namespace {

std::vector<double> paired_sample(std::size_t n, double target_stddev) {
    const double a =
        target_stddev * std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n));
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? a : -a;
    return v;
}

}  // namespace

TEST_CASE("Silverman final time") {
    SUBCASE("n = 100, s = 1, IQR/1.34 > 1") {
        // +/-1 pairs: s = 1 and IQR/1.34 = 2/1.34 > 1, so s drives the rule.
        const SmoothingSchedule sch = silverman_time(Sample1D{paired_sample(100, 1.0)});
        CHECK(sch.final_time == doctest::Approx(0.12837634858935018).epsilon(1e-9));
        CHECK(sch.steps == 32);
        CHECK(sch.rule == TimeRule::silverman_squared);
    }
    SUBCASE("n = 32, s = 1 gives T = 0.2025 exactly") {
        const SmoothingSchedule sch = silverman_time(Sample1D{paired_sample(32, 1.0)});
        CHECK(sch.final_time == doctest::Approx(0.2025).epsilon(1e-12));
    }
    SUBCASE("constant sample") {
        CHECK_THROWS_AS(silverman_time(Sample1D{std::vector<double>(20, -3.0)}),
                        DegenerateDataError);
    }
    SUBCASE("zero IQR with positive stddev falls back to stddev") {
        // 96 tied values and two outliers: IQR = 0 but s > 0.
        std::vector<double> v(96, 1.0);
        v.push_back(0.0);
        v.push_back(2.0);
        CHECK_NOTHROW(silverman_time(Sample1D{std::move(v)}));
    }
}

TEST_CASE("pilot construction") {
    SUBCASE("uniform pilot is the reciprocal domain width") {
        const Grid1D g = make_grid(-3.0, 7.0, 64);
        const PilotDensity p = uniform_pilot(g);
        for (double v : p.p.y) CHECK(v == doctest::Approx(0.1).epsilon(1e-15));
    }
    SUBCASE("single cluster peaks at the data and stays above the floor") {
        testsupport::Rng rng(4);
        std::vector<double> values(120);
        for (double& v : values) v = 0.4 * rng.normal();
        const Grid1D g = make_grid(-5.0, 5.0, 256);
        const PilotDensity p = build_pilot(Sample1D{std::move(values)}, g);

        std::size_t argmax = 0;
        for (std::size_t i = 1; i < p.p.y.size(); ++i) {
            if (p.p.y[i] > p.p.y[argmax]) argmax = i;
        }
        CHECK(std::abs(g.node(argmax)) < 0.5);
        CHECK(p.floor > 0.0);
        for (double v : p.p.y) CHECK(v >= p.floor);
        // unit mass before flooring; flooring only adds a little
        CHECK(integrate(p.p) >= 1.0 - 1e-12);
        CHECK(integrate(p.p) < 1.01);
    }
    SUBCASE("bimodal sample gives a symmetric pilot") {
        std::vector<double> values;
        for (int i = 0; i < 50; ++i) {
            values.push_back(-2.0);
            values.push_back(2.0);
        }
        const Grid1D g = make_grid(-5.0, 5.0, 200);
        const PilotDensity p = build_pilot(Sample1D{std::move(values)}, g);
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            CHECK(std::abs(p.p.y[i] - p.p.y[g.m - i]) < 1e-12);
        }
    }
}

TEST_CASE("vanishing diffusion time returns the binned input") {
    const Sample1D s{testsupport::trimodal_sample(100, 2)};
    const auto [lo, hi] = default_domain(s.values());
    const Grid1D g = make_grid(lo, hi, 64);
    const GridFunction u0 = bin_samples(s, g);
    const DensityEstimate d = diffkde_solve(u0, build_pilot(s, g), manual_time(1e-12, 32));
    for (std::size_t i = 0; i < u0.y.size(); ++i) {
        CHECK(std::abs(d.y[i] - u0.y[i]) < 1e-8);
    }
}

TEST_CASE("solve conserves mass and stays nonnegative") {
    testsupport::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 10 + static_cast<std::size_t>(rng.uniform() * 300);
        std::vector<double> values(n);
        for (double& v : values) {
            v = (rng.uniform() < 0.5 ? -1.5 : 1.0) + 0.6 * rng.normal();
        }
        const Sample1D s{std::move(values)};
        const auto [lo, hi] = default_domain(s.values());
        const Grid1D g = make_grid(lo, hi, 512);
        const GridFunction u0 = bin_samples(s, g);
        SolveStats stats;
        const DensityEstimate d = diffkde_solve(u0, build_pilot(s, g), silverman_time(s), &stats);
        CHECK(std::abs(integrate(g, d.y) - integrate(u0)) < 1e-10);
        CHECK(stats.min_pre_clip > -1e-9);
        for (double v : d.y) CHECK(v >= 0.0);
    }
}

TEST_CASE("ghost-node operator drops no mass: direct matrix construction") {
    // Build the dense operator L u = 1/(2 dx^2) A (u/p) on m = 8 with the
    // reflective ghost nodes, independently of the solver, and check that
    // its trapezoid-weighted column sums vanish identically.
    const Grid1D g{0.0, 1.0, 8, 0.125};
    std::vector<double> p = {0.4, 0.9, 1.3, 0.7, 0.5, 1.1, 0.8, 0.6, 1.0};
    const std::size_t nn = g.node_count();
    std::vector<std::vector<double>> L(nn, std::vector<double>(nn, 0.0));
    const double scale = 1.0 / (2.0 * g.dx * g.dx);
    for (std::size_t j = 0; j < nn; ++j) {
        std::vector<double> w(nn, 0.0);
        w[j] = 1.0 / p[j];  // apply to the unit vector e_j
        for (std::size_t i = 0; i < nn; ++i) {
            const double left = i == 0 ? w[1] : w[i - 1];
            const double right = i == nn - 1 ? w[nn - 2] : w[i + 1];
            L[i][j] = scale * (left - 2.0 * w[i] + right);
        }
    }
    for (std::size_t j = 0; j < nn; ++j) {
        double column = 0.0;
        for (std::size_t i = 0; i < nn; ++i) {
            column += (i == 0 || i == nn - 1 ? 0.5 : 1.0) * L[i][j];
        }
        CHECK(column == 0.0);
    }
}

TEST_CASE("uniform pilot reduces to a near-Gaussian smooth") {
    // Single point mass in the middle of a wide domain; the solution must
    // match a Gaussian of variance T * (hi - lo) established by the
    // fine-step oracle (see the acceptance suite for the full check).
    const Grid1D g = make_grid(-20.0, 20.0, 1024);
    const Sample1D s{{g.node(512)}};
    const GridFunction u0 = bin_samples(s, g);
    const double final_time = 0.025;  // variance 1 on width 40
    const DensityEstimate d = diffkde_solve(u0, uniform_pilot(g), manual_time(final_time, 2048));
    const double var = final_time * (g.hi - g.lo);
    double max_err = 0.0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const double x = g.node(i) - g.node(512);
        const double ref =
            std::exp(-0.5 * x * x / var) / std::sqrt(2.0 * 3.14159265358979323846 * var);
        max_err = std::max(max_err, std::abs(d.y[i] - ref));
    }
    CHECK(max_err < 1e-3);
}

TEST_CASE("uniform pilot step refinement is converged at the defaults") {
    testsupport::Rng rng(11);
    std::vector<double> values(10000);
    for (double& v : values) v = rng.normal();
    const Sample1D s{std::move(values)};
    const auto [lo, hi] = default_domain(s.values());
    const Grid1D g = make_grid(lo, hi, 1024);
    const GridFunction u0 = bin_samples(s, g);
    const PilotDensity pilot = uniform_pilot(g);
    const SmoothingSchedule sch = silverman_time(s);
    const DensityEstimate coarse = diffkde_solve(u0, pilot, manual_time(sch.final_time, 32));
    const DensityEstimate fine = diffkde_solve(u0, pilot, manual_time(sch.final_time, 64));
    double max_diff = 0.0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        max_diff = std::max(max_diff, std::abs(coarse.y[i] - fine.y[i]));
    }
    CHECK(max_diff < 1e-4);
}

TEST_CASE("diffkde end to end") {
    SUBCASE("trimodal sample recovers the modes") {
        const Sample1D s100{testsupport::trimodal_sample(100, 3)};
        const auto [lo, hi] = default_domain(s100.values());
        const Grid1D g = make_grid(lo, hi, 1024);
        const DensityEstimate d = diffkde(s100, g);
        CHECK(testsupport::count_modes(d.y) >= 3);
        CHECK(d.method == EstimatorMethod::diffusion);
        CHECK(d.sample_count == 100);

        const Sample1D s50{testsupport::trimodal_sample(50, 3)};
        const auto [lo50, hi50] = default_domain(s50.values());
        const DensityEstimate d50 = diffkde(s50, make_grid(lo50, hi50, 1024));
        CHECK(testsupport::count_modes(d50.y) >= 2);
    }
    SUBCASE("lognormal sample on a domain clipped at zero keeps unit mass") {
        const Sample1D s{testsupport::lognormal_sample(100, 3)};
        double vmax = 0.0;
        for (double v : s.values()) vmax = std::max(vmax, v);
        const Grid1D g = make_grid(0.0, 1.1 * vmax, 1024);
        const DensityEstimate d = diffkde(s, g);
        CHECK(integrate(g, d.y) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("boundary-abutting data stays consistent under diffusion") {
    const Sample1D s{testsupport::half_gaussian_sample(200, 1)};
    double vmax = 0.0;
    for (double v : s.values()) vmax = std::max(vmax, v);
    const Grid1D g = make_grid(0.0, 1.05 * vmax, 1024);
    const DensityEstimate diff = diffkde(s, g);
    CHECK(diff.y[0] > 0.0);
    CHECK(integrate(g, diff.y) == doctest::Approx(1.0).epsilon(1e-6));
    // same data under the Gaussian baseline loses over 1% of its mass
    const DensityEstimate gauss = gaussian_kde_evaluate(s, g, scott_bandwidth(s));
    CHECK(integrate(g, gauss.y) < 0.99);
}

TEST_CASE("mode count is non-increasing in the final time") {
    const Sample1D s{testsupport::trimodal_sample(100, 3)};
    const auto [lo, hi] = default_domain(s.values());
    const Grid1D g = make_grid(lo, hi, 1024);
    const GridFunction u0 = bin_samples(s, g);
    const PilotDensity pilot = build_pilot(s, g);
    const SmoothingSchedule sch = silverman_time(s);
    std::size_t previous = static_cast<std::size_t>(-1);
    for (double factor : {0.25, 1.0, 4.0}) {
        const DensityEstimate d =
            diffkde_solve(u0, pilot, manual_time(sch.final_time * factor, sch.steps));
        const std::size_t modes = testsupport::count_modes(d.y);
        CHECK(modes <= previous);
        previous = modes;
    }
}

TEST_CASE("solver input validation") {
    const Sample1D s{testsupport::trimodal_sample(30, 5)};
    const Grid1D g = make_grid(0.0, 2.0, 64);
    const GridFunction u0 = bin_samples(s, g);
    SUBCASE("pilot on a different grid") {
        const Grid1D other = make_grid(0.0, 2.0, 128);
        CHECK_THROWS_AS(diffkde_solve(u0, uniform_pilot(other), manual_time(0.1, 32)),
                        GridMismatchError);
    }
    SUBCASE("bad schedule") {
        CHECK_THROWS_AS(manual_time(0.0, 32), Error);
        CHECK_THROWS_AS(manual_time(0.1, 4), Error);
    }
    SUBCASE("single-value sample") {
        CHECK_THROWS_AS(diffkde(Sample1D{{1.0}}, g), InsufficientDataError);
    }
}
