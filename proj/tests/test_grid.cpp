#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phq/grid.hpp"

#include <cmath>
#include <numbers>

using namespace phq;

TEST_CASE("symmetric grid layout") {
    const Grid1D g = Grid1D::symmetric(16.0, 1024);
    CHECK(g.count == 1024);
    CHECK(g.step == doctest::Approx(0.03125).epsilon(1e-15));
    CHECK(g.point(512) == 0.0);
    CHECK(g.point(0) == -16.0);
    CHECK(g.point(1023) == doctest::Approx(16.0 - g.step).epsilon(1e-15));
    CHECK(g.halfwidth() == doctest::Approx(16.0).epsilon(1e-15));
    CHECK(g.symmetric_about_zero());
    CHECK(g.power_of_two_count());

    const Grid1D odd = Grid1D::symmetric(8.0, 320);
    CHECK_FALSE(odd.power_of_two_count());
    CHECK(odd.symmetric_about_zero());

    const Grid1D shifted{0.0, 0.125, 256};
    CHECK_FALSE(shifted.symmetric_about_zero());
}

TEST_CASE("points vector matches point()") {
    const Grid1D g = Grid1D::symmetric(2.0, 8);
    const auto pts = g.points();
    REQUIRE(pts.size() == 8);
    for (int j = 0; j < 8; ++j) CHECK(pts[static_cast<std::size_t>(j)] == g.point(j));
}

TEST_CASE("dual grid pairs step sizes through 2 pi") {
    const Grid1D g = Grid1D::symmetric(16.0, 1024);
    const Grid1D d = dual_grid(g);
    CHECK(d.count == g.count);
    CHECK(d.step * g.step * g.count == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(d.symmetric_about_zero());
    // duality is an involution up to rounding
    const Grid1D dd = dual_grid(d);
    CHECK(dd.step == doctest::Approx(g.step).epsilon(1e-14));
}

TEST_CASE("default grid") {
    const Grid1D g = default_grid();
    CHECK(g.count == 1024);
    CHECK(g.halfwidth() == doctest::Approx(16.0).epsilon(1e-15));
}
