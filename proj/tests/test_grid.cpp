#include <doctest.h>

#include <cmath>
#include <vector>

#include "denskit/errors.hpp"
#include "denskit/grid.hpp"
#include "support/synthetic.hpp"

using namespace denskit;

TEST_CASE("make_grid produces equispaced nodes") {
    const Grid1D g = make_grid(0.0, 1.0, 16);
    CHECK(g.node_count() == 17);
    CHECK(g.dx == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(4) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.node(16) == doctest::Approx(1.0).epsilon(1e-15));

    const Grid1D wide = make_grid(-1.0, 12.0, 26);
    CHECK(wide.dx == doctest::Approx(0.5).epsilon(1e-15));

    // strictly increasing, equispaced to machine precision
    const auto xs = wide.nodes();
    for (std::size_t i = 1; i < xs.size(); ++i) {
        CHECK(xs[i] > xs[i - 1]);
        CHECK(xs[i] - xs[i - 1] == doctest::Approx(wide.dx).epsilon(1e-12));
    }
}

TEST_CASE("make_grid rejects bad input") {
    CHECK_THROWS_AS(make_grid(5.0, 5.0, 100), DomainEmptyError);
    CHECK_THROWS_AS(make_grid(1.0, 0.0, 100), DomainEmptyError);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 4), ResolutionError);
    CHECK_THROWS_AS(make_grid(-1.0, 12.0, 13), ResolutionError);
}

TEST_CASE("default_domain pads by the margin fraction") {
    {
        const auto [lo, hi] = default_domain(std::vector<double>{0.0, 10.0}, 0.1);
        CHECK(lo == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(hi == doctest::Approx(11.0).epsilon(1e-15));
    }
    {
        const auto [lo, hi] = default_domain(std::vector<double>{2.0, 4.0, 6.0}, 0.0);
        CHECK(lo == 2.0);
        CHECK(hi == 6.0);
    }
    {
        const auto [lo, hi] = default_domain(std::vector<double>{-30.0, -17.0}, 0.1);
        CHECK(lo == doctest::Approx(-31.3).epsilon(1e-12));
        CHECK(hi == doctest::Approx(-15.7).epsilon(1e-12));
    }
    CHECK_THROWS_AS(default_domain(std::vector<double>{3.0, 3.0, 3.0}, 0.1), DegenerateDataError);
}

TEST_CASE("bin_samples splits weight between bracketing nodes") {
    // Coarse grids below the make_grid resolution floor are built directly;
    // binning itself has no resolution requirement.
    const Grid1D g{0.0, 1.0, 2, 0.5};

    SUBCASE("sample on a node") {
        const GridFunction f = bin_samples(Sample1D{{0.5}}, g);
        CHECK(f.y == std::vector<double>{0.0, 2.0, 0.0});
        CHECK(integrate(f) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("sample halfway between nodes") {
        // Half the mass lands on the boundary node, which carries half
        // trapezoid weight and is therefore stored at doubled density.
        const GridFunction f = bin_samples(Sample1D{{0.25}}, g);
        CHECK(f.y == std::vector<double>{2.0, 1.0, 0.0});
        CHECK(integrate(f) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("sample outside the domain") {
        CHECK_THROWS_AS(bin_samples(Sample1D{{2.0}}, g), OutOfDomainError);
        CHECK_THROWS_WITH_AS(bin_samples(Sample1D{{2.0}}, g),
                             doctest::Contains("2"), OutOfDomainError);
    }
    SUBCASE("samples on the domain ends keep unit mass") {
        const Grid1D fine = make_grid(0.0, 1.0, 64);
        const GridFunction f = bin_samples(Sample1D{{0.0, 1.0, 0.999}}, fine);
        CHECK(integrate(f) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("linear binning conserves mass for random samples") {
    testsupport::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 998);
        std::vector<double> values(n);
        for (double& v : values) v = -3.0 + 6.0 * rng.uniform();
        const Grid1D g = make_grid(-3.0, 3.0, 16 + trial * 7);
        const GridFunction f = bin_samples(Sample1D{std::move(values)}, g);
        CHECK(std::abs(integrate(f) - 1.0) < 1e-12);
        for (double v : f.y) CHECK(v >= 0.0);
    }
}

TEST_CASE("binning is translation consistent") {
    // Dyadic values and integer shifts keep all arithmetic exact, so the
    // binned arrays must be bitwise identical.
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> values(40);
        for (double& v : values) {
            v = static_cast<double>(static_cast<int>(rng.uniform() * 512)) / 64.0;
        }
        const double shift = static_cast<double>(1 + static_cast<int>(rng.uniform() * 100));
        const Grid1D g = make_grid(-1.0, 9.0, 160);
        const Grid1D gs = make_grid(-1.0 + shift, 9.0 + shift, 160);
        std::vector<double> shifted = values;
        for (double& v : shifted) v += shift;
        const GridFunction a = bin_samples(Sample1D{std::move(values)}, g);
        const GridFunction b = bin_samples(Sample1D{std::move(shifted)}, gs);
        CHECK(a.y == b.y);
    }
}

TEST_CASE("integrate matches closed forms and is linear") {
    const Grid1D g10 = make_grid(0.0, 1.0, 16);
    CHECK(integrate(g10, std::vector<double>(17, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));

    const Grid1D g2{0.0, 1.0, 2, 0.5};
    CHECK(integrate(g2, std::vector<double>{0.0, 0.5, 1.0}) ==
          doctest::Approx(0.5).epsilon(1e-15));

    testsupport::Rng rng(3);
    const Grid1D g = make_grid(-2.0, 5.0, 97);
    std::vector<double> f(g.node_count()), h(g.node_count()), combo(g.node_count());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = rng.uniform();
        h[i] = rng.uniform() - 0.3;
    }
    const double a = 2.25;
    const double b = -0.75;
    for (std::size_t i = 0; i < f.size(); ++i) combo[i] = a * f[i] + b * h[i];
    CHECK(std::abs(integrate(g, combo) - (a * integrate(g, f) + b * integrate(g, h))) < 1e-12);
}

TEST_CASE("sample validation") {
    CHECK_THROWS_AS(Sample1D(std::vector<double>{}), InsufficientDataError);
    CHECK_THROWS_AS(Sample1D(std::vector<double>{1.0, std::nan("")}), Error);
}
