#pragma once

#include <cstddef>

#include "denskit/gaussian_kde.hpp"
#include "denskit/grid.hpp"

namespace denskit {

/// Default number of implicit Euler steps for the diffusion solve.
inline constexpr std::size_t kDefaultTimeSteps = 32;

/// Pilot values are clamped below at this fraction of their maximum.
inline constexpr double kPilotFloorFraction = 1e-3;

/// Strictly positive grid function steering the adaptive smoothing: regions
/// where the pilot is large diffuse less. floor records the lower clamp that
/// was applied.
struct PilotDensity {
    GridFunction p;
    double floor = 0.0;
};

enum class TimeRule { silverman_squared, manual };

/// Final diffusion time and the number of implicit time steps used to
/// reach it.
struct SmoothingSchedule {
    double final_time = 0.0;
    std::size_t steps = kDefaultTimeSteps;
    TimeRule rule = TimeRule::manual;
};

/// T = (0.9 * min(s, IQR/1.34) * n^(-1/5))^2 with 32 steps.
SmoothingSchedule silverman_time(const Sample1D& sample);

SmoothingSchedule manual_time(double final_time, std::size_t steps = kDefaultTimeSteps);

/// Gaussian estimate of the sample at the Silverman bandwidth, normalized to
/// unit mass on the grid and then clamped below at 1e-3 of its maximum. The
/// clamp keeps the pilot strictly positive where the data leaves gaps.
PilotDensity build_pilot(const Sample1D& sample, const Grid1D& grid);

/// Constant pilot p = 1/(hi - lo); reduces the solve to the classical heat
/// equation with diffusivity (hi - lo)/2, i.e. a Gaussian smooth of variance
/// T * (hi - lo).
PilotDensity uniform_pilot(const Grid1D& grid);

/// Solver diagnostics; min_pre_clip is the most negative entry observed in
/// the final state before round-off clipping (0 when none).
struct SolveStats {
    double min_pre_clip = 0.0;
};

/// Advances u0 to the schedule's final time with implicit Euler steps of
/// du/dt = 1/2 d^2/dx^2 (u/p) under zero-flux boundaries d/dx (u/p) = 0,
/// discretized with ghost-node reflection of u/p. Each step is one
/// symmetric positive definite tridiagonal solve; the scheme conserves the
/// trapezoidal integral of u exactly and cannot produce negative values
/// beyond floating-point round-off. Entries in (-1e-12, 0) are clipped to 0;
/// anything more negative raises SolverError.
DensityEstimate diffkde_solve(const GridFunction& u0, const PilotDensity& pilot,
                              const SmoothingSchedule& schedule,
                              SolveStats* stats = nullptr);

/// End-to-end diffusion estimate: bin_samples + build_pilot + silverman_time
/// + diffkde_solve.
DensityEstimate diffkde(const Sample1D& sample, const Grid1D& grid);

}  // namespace denskit
