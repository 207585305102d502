#include "denskit/diffusion_kde.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "denskit/errors.hpp"
#include "denskit/stats.hpp"

namespace denskit {

namespace {

constexpr double kNegativeClip = 1e-12;

}  // namespace

SmoothingSchedule silverman_time(const Sample1D& sample) {
    const double h = silverman_factor(sample.values());
    return {h * h, kDefaultTimeSteps, TimeRule::silverman_squared};
}

SmoothingSchedule manual_time(double final_time, std::size_t steps) {
    if (!(final_time > 0.0)) throw Error("final diffusion time must be positive");
    if (steps < 8) throw Error("schedule needs at least 8 time steps");
    return {final_time, steps, TimeRule::manual};
}

PilotDensity build_pilot(const Sample1D& sample, const Grid1D& grid) {
    DensityEstimate kde = gaussian_kde_evaluate(sample, grid, silverman_bandwidth(sample));
    const double mass = integrate(grid, kde.y);
    if (!(mass > 0.0)) throw ZeroMassError("pilot estimate carries no mass");
    for (double& v : kde.y) v /= mass;

    const double peak = *std::max_element(kde.y.begin(), kde.y.end());
    const double floor = kPilotFloorFraction * peak;
    for (double& v : kde.y) v = std::max(v, floor);
    return {GridFunction{grid, std::move(kde.y)}, floor};
}

PilotDensity uniform_pilot(const Grid1D& grid) {
    const double level = 1.0 / (grid.hi - grid.lo);
    return {GridFunction{grid, std::vector<double>(grid.node_count(), level)}, level};
}

DensityEstimate diffkde_solve(const GridFunction& u0, const PilotDensity& pilot,
                              const SmoothingSchedule& schedule, SolveStats* stats) {
    const Grid1D& grid = u0.grid;
    if (!(pilot.p.grid == grid)) throw GridMismatchError("pilot and initial state use different grids");
    if (u0.y.size() != grid.node_count() || pilot.p.y.size() != grid.node_count()) {
        throw GridMismatchError("grid function length does not match the grid");
    }
    if (!(schedule.final_time > 0.0)) throw Error("final diffusion time must be positive");
    if (schedule.steps < 8) throw Error("schedule needs at least 8 time steps");

    const std::vector<double>& p = pilot.p.y;
    for (double v : p) {
        if (!(v > 0.0)) throw SolverError("pilot must be strictly positive");
    }

    const std::size_t nodes = grid.node_count();
    const std::size_t last = nodes - 1;
    const double dt = schedule.final_time / static_cast<double>(schedule.steps);
    const double c = dt / (2.0 * grid.dx * grid.dx);

    // One implicit step solves (S P - c S A) w = S u, u_next = p * w, where
    // w = u/p, S holds the trapezoid weights and A is the second-difference
    // stencil with ghost-node reflection of w at both ends. The system matrix
    // is symmetric positive definite with off-diagonals -c, so an unpivoted
    // tridiagonal factorization is stable and the update preserves the
    // trapezoidal integral of u exactly and keeps u nonnegative.
    std::vector<double> diag(nodes);
    diag[0] = 0.5 * p[0] + c;
    for (std::size_t i = 1; i < last; ++i) diag[i] = p[i] + 2.0 * c;
    diag[last] = 0.5 * p[last] + c;

    std::vector<double> den(nodes), upper(nodes - 1);
    den[0] = diag[0];
    for (std::size_t i = 1; i < nodes; ++i) {
        if (!(den[i - 1] > 0.0) || !std::isfinite(den[i - 1])) {
            throw SolverError("tridiagonal factorization hit a non-positive pivot");
        }
        upper[i - 1] = -c / den[i - 1];
        den[i] = diag[i] - c * c / den[i - 1];
    }
    if (!(den[last] > 0.0) || !std::isfinite(den[last])) {
        throw SolverError("tridiagonal factorization hit a non-positive pivot");
    }

    std::vector<double> u = u0.y;
    std::vector<double> rhs(nodes);
    for (std::size_t step = 0; step < schedule.steps; ++step) {
        rhs[0] = 0.5 * u[0];
        for (std::size_t i = 1; i < last; ++i) rhs[i] = u[i];
        rhs[last] = 0.5 * u[last];

        rhs[0] /= den[0];
        for (std::size_t i = 1; i < nodes; ++i) rhs[i] = (rhs[i] + c * rhs[i - 1]) / den[i];
        for (std::size_t i = last; i-- > 0;) rhs[i] -= upper[i] * rhs[i + 1];

        for (std::size_t i = 0; i < nodes; ++i) u[i] = p[i] * rhs[i];
    }

    double min_pre_clip = 0.0;
    for (double v : u) min_pre_clip = std::min(min_pre_clip, v);
    if (stats != nullptr) stats->min_pre_clip = min_pre_clip;
    if (min_pre_clip <= -kNegativeClip) {
        throw SolverError("solution went negative beyond round-off; discretization bug");
    }
    for (double& v : u) {
        if (v < 0.0) v = 0.0;
    }

    return DensityEstimate{grid, std::move(u), EstimatorMethod::diffusion,
                           schedule.final_time, 0};
}

DensityEstimate diffkde(const Sample1D& sample, const Grid1D& grid) {
    if (sample.n() < 2) throw InsufficientDataError("diffusion estimate requires n >= 2");
    const GridFunction u0 = bin_samples(sample, grid);
    const PilotDensity pilot = build_pilot(sample, grid);
    const SmoothingSchedule schedule = silverman_time(sample);
    DensityEstimate est = diffkde_solve(u0, pilot, schedule);
    est.sample_count = sample.n();
    return est;
}

}  // namespace denskit
