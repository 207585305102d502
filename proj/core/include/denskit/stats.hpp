#pragma once

#include <cstddef>
#include <span>

namespace denskit {

double mean(std::span<const double> v);

/// Sample standard deviation with 1/(n-1) normalization. Requires n >= 2.
double sample_stddev(std::span<const double> v);

/// Linear-interpolation quantile (the "type 7" rule: h = (n-1)p) on an
/// already sorted range. p in [0, 1].
double sorted_quantile(std::span<const double> sorted, double p);

/// Interquartile range via linear-interpolation quantiles; sorts a copy.
double interquartile_range(std::span<const double> v);

/// Silverman's rule-of-thumb length scale 0.9 * min(s, IQR/1.34) * n^(-1/5).
/// A zero candidate (e.g. IQR = 0 on heavily tied data) is skipped; throws
/// DegenerateDataError when neither s nor IQR is positive.
double silverman_factor(std::span<const double> v);

}  // namespace denskit
