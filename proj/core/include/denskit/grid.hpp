#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace denskit {

/// Grid resolution used when the caller does not specify one.
inline constexpr std::size_t kDefaultGridIntervals = 1024;

/// Domain padding (fraction of the data range) used when the caller does
/// not specify bounds.
inline constexpr double kDefaultMarginFraction = 0.1;

/// Uniform evaluation grid over [lo, hi] with m intervals (m + 1 nodes).
struct Grid1D {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t m = 16;
    double dx = 1.0 / 16.0;

    std::size_t node_count() const { return m + 1; }
    double node(std::size_t i) const { return lo + static_cast<double>(i) * dx; }
    std::vector<double> nodes() const;

    friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

/// One-dimensional data sample. Values must be finite; estimators require
/// n >= 2 but a single-value sample is representable so that ingestion can
/// defer that check to the estimator.
class Sample1D {
public:
    explicit Sample1D(std::vector<double> values);

    std::span<const double> values() const { return values_; }
    std::size_t n() const { return values_.size(); }

private:
    std::vector<double> values_;
};

/// Grid-aligned real function: y[i] is the value at grid.node(i).
struct GridFunction {
    Grid1D grid;
    std::vector<double> y;
};

/// Builds a uniform grid. Throws DomainEmptyError if hi <= lo and
/// ResolutionError if m < 16.
Grid1D make_grid(double lo, double hi, std::size_t m);

/// Data-driven domain: [min - f*range, max + f*range]. Throws
/// DegenerateDataError when all values are identical.
std::pair<double, double> default_domain(std::span<const double> values,
                                         double margin_fraction = kDefaultMarginFraction);

/// Discretizes the sample's empirical measure onto the grid by linear
/// binning: each point splits weight 1/(n*dx) between its two bracketing
/// nodes in proportion to proximity. The two boundary nodes carry half
/// trapezoid weight, so mass landing there is stored at twice the density;
/// this keeps integrate() of the result at exactly 1 for every admissible
/// sample, including points on or next to the domain ends.
/// Throws OutOfDomainError listing values outside [lo, hi].
GridFunction bin_samples(const Sample1D& sample, const Grid1D& grid);

/// Trapezoidal quadrature over the grid.
double integrate(const Grid1D& grid, std::span<const double> y);
double integrate(const GridFunction& f);

}  // namespace denskit
