#pragma once

#include <cstddef>
#include <vector>

#include "denskit/grid.hpp"

namespace denskit {

enum class BandwidthRule { scott, silverman, manual };

/// Smoothing parameter of the Gaussian estimator, stored as the kernel
/// variance t (squared data units), not the standard deviation.
struct GaussianBandwidth {
    double t = 1.0;
    BandwidthRule rule = BandwidthRule::manual;
};

enum class EstimatorMethod { gaussian, diffusion };

/// Grid-aligned density curve with the method and smoothing that produced it.
/// smoothing is t for the Gaussian estimator and the final time T for the
/// diffusion estimator.
struct DensityEstimate {
    Grid1D grid;
    std::vector<double> y;
    EstimatorMethod method = EstimatorMethod::gaussian;
    double smoothing = 0.0;
    std::size_t sample_count = 0;
};

/// Scott's rule: t = (n^(-1/5) * s)^2. Throws DegenerateDataError when the
/// sample standard deviation is zero, InsufficientDataError when n < 2.
GaussianBandwidth scott_bandwidth(const Sample1D& sample);

/// Silverman's rule: t = (0.9 * min(s, IQR/1.34) * n^(-1/5))^2.
GaussianBandwidth silverman_bandwidth(const Sample1D& sample);

GaussianBandwidth manual_bandwidth(double t);

/// Classical Gaussian kernel estimate on the grid nodes:
///   y_i = 1/(n sqrt(t)) * sum_j phi((x_i - X_j)/sqrt(t))
/// by exact summation over every sample point (no tail truncation). On a
/// domain that cuts into kernel tails the integral of the result is < 1;
/// that deficiency is intentional and surfaced by downstream diagnostics.
DensityEstimate gaussian_kde_evaluate(const Sample1D& sample, const Grid1D& grid,
                                      const GaussianBandwidth& bw);

}  // namespace denskit
