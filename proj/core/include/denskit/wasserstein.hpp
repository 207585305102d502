#pragma once

#include <vector>

#include "denskit/gaussian_kde.hpp"
#include "denskit/grid.hpp"

namespace denskit {

/// Normalized cumulative distribution on the grid: c[0] = 0, c[m] = 1,
/// non-decreasing. raw_mass keeps the integral the curve had before
/// renormalization (a Gaussian estimate truncated by the domain has
/// raw_mass < 1).
struct CdfFunction {
    Grid1D grid;
    std::vector<double> c;
    double raw_mass = 0.0;
};

/// Cumulative trapezoid of the density, renormalized so the final value is
/// exactly 1. Throws ZeroMassError when the integral is <= 1e-12.
CdfFunction to_cdf(const DensityEstimate& d);

/// Wasserstein-1 distance between two densities on the same grid, computed
/// as the trapezoidal integral of |CDF_a - CDF_b| after renormalizing both
/// curves to unit mass. Result is in data units. Throws GridMismatchError
/// when the grids differ.
double wasserstein1(const DensityEstimate& a, const DensityEstimate& b);

}  // namespace denskit
