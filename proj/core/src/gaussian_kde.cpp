#include "denskit/gaussian_kde.hpp"

#include <cmath>

#include "denskit/errors.hpp"
#include "denskit/stats.hpp"

namespace denskit {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

}  // namespace

GaussianBandwidth scott_bandwidth(const Sample1D& sample) {
    const double s = sample_stddev(sample.values());
    if (s <= 0.0) throw DegenerateDataError("Scott bandwidth: sample standard deviation is zero");
    const double h = std::pow(static_cast<double>(sample.n()), -0.2) * s;
    return {h * h, BandwidthRule::scott};
}

GaussianBandwidth silverman_bandwidth(const Sample1D& sample) {
    const double h = silverman_factor(sample.values());
    return {h * h, BandwidthRule::silverman};
}

GaussianBandwidth manual_bandwidth(double t) {
    if (!(t > 0.0)) throw Error("bandwidth variance t must be positive");
    return {t, BandwidthRule::manual};
}

DensityEstimate gaussian_kde_evaluate(const Sample1D& sample, const Grid1D& grid,
                                      const GaussianBandwidth& bw) {
    if (!(bw.t > 0.0)) throw Error("bandwidth variance t must be positive");

    const double inv_h = 1.0 / std::sqrt(bw.t);
    const double norm = kInvSqrt2Pi * inv_h / static_cast<double>(sample.n());
    const auto xs = sample.values();

    DensityEstimate out{grid, std::vector<double>(grid.node_count()),
                        EstimatorMethod::gaussian, bw.t, sample.n()};
    for (std::size_t i = 0; i < out.y.size(); ++i) {
        const double x = grid.node(i);
        double acc = 0.0;
        for (double xj : xs) {
            const double z = (x - xj) * inv_h;
            acc += std::exp(-0.5 * z * z);
        }
        out.y[i] = norm * acc;
    }
    return out;
}

}  // namespace denskit
