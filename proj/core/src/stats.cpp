#include "denskit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "denskit/errors.hpp"

namespace denskit {

double mean(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

double sample_stddev(std::span<const double> v) {
    if (v.size() < 2) throw InsufficientDataError("standard deviation requires at least 2 values");
    const double mu = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - mu) * (x - mu);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

double sorted_quantile(std::span<const double> sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 0) throw InsufficientDataError("quantile of an empty range");
    if (n == 1) return sorted[0];
    const double h = p * static_cast<double>(n - 1);
    const auto i = static_cast<std::size_t>(h);
    if (i + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

double interquartile_range(std::span<const double> v) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
}

double silverman_factor(std::span<const double> v) {
    const double s = sample_stddev(v);
    const double iqr_scaled = interquartile_range(v) / 1.34;
    double scale = 0.0;
    if (s > 0.0 && iqr_scaled > 0.0) {
        scale = std::min(s, iqr_scaled);
    } else if (s > 0.0) {
        scale = s;
    } else if (iqr_scaled > 0.0) {
        scale = iqr_scaled;
    } else {
        throw DegenerateDataError("sample has zero dispersion (s and IQR both zero)");
    }
    return 0.9 * scale * std::pow(static_cast<double>(v.size()), -0.2);
}

}  // namespace denskit
