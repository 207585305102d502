#include "denskit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "denskit/errors.hpp"

namespace denskit {

namespace {

constexpr std::size_t kMinIntervals = 16;

}  // namespace

std::vector<double> Grid1D::nodes() const {
    std::vector<double> xs(node_count());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = node(i);
    return xs;
}

Sample1D::Sample1D(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InsufficientDataError("sample must contain at least one value");
    for (double v : values_) {
        if (!std::isfinite(v)) throw Error("sample values must be finite");
    }
}

Grid1D make_grid(double lo, double hi, std::size_t m) {
    if (!(hi > lo)) {
        std::ostringstream msg;
        msg << "domain is empty: lo = " << lo << ", hi = " << hi;
        throw DomainEmptyError(msg.str());
    }
    if (m < kMinIntervals) {
        std::ostringstream msg;
        msg << "grid needs at least " << kMinIntervals << " intervals, got " << m;
        throw ResolutionError(msg.str());
    }
    return Grid1D{lo, hi, m, (hi - lo) / static_cast<double>(m)};
}

std::pair<double, double> default_domain(std::span<const double> values, double margin_fraction) {
    if (values.size() < 2) throw InsufficientDataError("domain inference needs at least 2 values");
    if (margin_fraction < 0.0) throw Error("margin_fraction must be >= 0");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double range = *hi_it - *lo_it;
    if (range <= 0.0) throw DegenerateDataError("all values identical; cannot infer a domain");
    return {*lo_it - margin_fraction * range, *hi_it + margin_fraction * range};
}

GridFunction bin_samples(const Sample1D& sample, const Grid1D& grid) {
    std::vector<double> offenders;
    for (double v : sample.values()) {
        if (v < grid.lo || v > grid.hi) offenders.push_back(v);
    }
    if (!offenders.empty()) {
        std::ostringstream msg;
        msg << offenders.size() << " sample value(s) outside [" << grid.lo << ", " << grid.hi << "]:";
        const std::size_t shown = std::min<std::size_t>(offenders.size(), 5);
        for (std::size_t i = 0; i < shown; ++i) msg << ' ' << offenders[i];
        if (offenders.size() > shown) msg << " ...";
        throw OutOfDomainError(msg.str());
    }

    GridFunction out{grid, std::vector<double>(grid.node_count(), 0.0)};
    const double w = 1.0 / (static_cast<double>(sample.n()) * grid.dx);
    for (double v : sample.values()) {
        double pos = (v - grid.lo) / grid.dx;
        auto idx = static_cast<std::size_t>(pos);
        if (idx >= grid.m) idx = grid.m - 1;  // v == hi lands in the last cell
        const double frac = std::clamp(pos - static_cast<double>(idx), 0.0, 1.0);
        out.y[idx] += w * (1.0 - frac);
        out.y[idx + 1] += w * frac;
    }
    // Boundary nodes carry half trapezoid weight; store their mass at double
    // density so the trapezoidal integral stays exactly 1.
    out.y.front() *= 2.0;
    out.y.back() *= 2.0;
    return out;
}

double integrate(const Grid1D& grid, std::span<const double> y) {
    if (y.size() != grid.node_count()) {
        throw GridMismatchError("grid function length does not match the grid");
    }
    double acc = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) acc += y[i];
    return acc * grid.dx;
}

double integrate(const GridFunction& f) { return integrate(f.grid, f.y); }

}  // namespace denskit
