#include "denskit/wasserstein.hpp"

#include <cmath>

#include "denskit/errors.hpp"

namespace denskit {

CdfFunction to_cdf(const DensityEstimate& d) {
    const Grid1D& grid = d.grid;
    if (d.y.size() != grid.node_count()) {
        throw GridMismatchError("grid function length does not match the grid");
    }
    std::vector<double> c(d.y.size());
    c[0] = 0.0;
    for (std::size_t i = 1; i < d.y.size(); ++i) {
        c[i] = c[i - 1] + 0.5 * grid.dx * (d.y[i - 1] + d.y[i]);
    }
    const double raw_mass = c.back();
    if (raw_mass <= 1e-12) throw ZeroMassError("density integrates to (near) zero");
    for (double& v : c) v /= raw_mass;
    c.back() = 1.0;
    return {grid, std::move(c), raw_mass};
}

double wasserstein1(const DensityEstimate& a, const DensityEstimate& b) {
    if (!(a.grid == b.grid)) throw GridMismatchError("Wasserstein distance needs a shared grid");
    const CdfFunction ca = to_cdf(a);
    const CdfFunction cb = to_cdf(b);
    double acc = 0.0;  // |c_a - c_b| vanishes at both ends, so no boundary halves
    for (std::size_t i = 1; i + 1 < ca.c.size(); ++i) acc += std::abs(ca.c[i] - cb.c[i]);
    return acc * a.grid.dx;
}

}  // namespace denskit
