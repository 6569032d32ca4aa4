#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phq/density.hpp"
#include "phq/fock.hpp"
#include "phq/oracle.hpp"
#include "phq/weights.hpp"

#include <cmath>
#include <complex>

using namespace phq;

namespace {

FockVector two_level(Complex c0, Complex c1) {
    FockVector v;
    v.coeffs.resize(2);
    v.coeffs << c0, c1;
    return v;
}

constexpr double kInvSqrt2Pi = 0.3989422804014327;

} // namespace

TEST_CASE("sampling a basis state reproduces the window function") {
    const Grid1D g = default_grid();
    const auto f = sample_state(basis_state(1, 0), g);
    CHECK(f[static_cast<std::size_t>(g.count / 2)].real() ==
          doctest::Approx(0.75112554446494248).epsilon(1e-14));
    CHECK(f[static_cast<std::size_t>(g.count / 2)].imag() == 0.0);
}

TEST_CASE("vacuum overlap coefficient has the closed form") {
    const FockVector vac = basis_state(1, 0);
    const Complex at_origin = weyl_coefficient(vac, 0, 0.0, 0.0);
    CHECK(std::abs(at_origin.real() - kInvSqrt2Pi) <= 1e-12);
    CHECK(std::abs(at_origin.imag()) <= 1e-12);

    const Complex off = weyl_coefficient(vac, 0, 0.8, -1.3);
    CHECK(std::abs(off.real() - 0.22280941076372514) <= 1e-12);
    CHECK(std::abs(off.imag()) <= 1e-12);
}

TEST_CASE("margin point values against quadrature") {
    const Grid1D t = default_grid();

    // level-0 window of the vacuum: (2 pi)^{-1/2} exp(-q^2/2)
    const Grid1D probe{0.5, t.step, 2};
    const MarginalDensity m0 = x_margin(basis_state(1, 0), 0, probe, t);
    CHECK(std::abs(m0.values[0] - 0.35206532676429948) <= 1e-12);

    // level-2 window of the vacuum at q = 1.1
    const Grid1D probe2{1.1, t.step, 2};
    const MarginalDensity m2 = x_margin(basis_state(1, 0), 2, probe2, t);
    CHECK(std::abs(m2.values[0] - 0.18746452148872264) <= 1e-12);
}

TEST_CASE("margins carry unit mass on a wide grid") {
    const FockVector f = two_level(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    for (int n : {0, 1, 3}) {
        const MarginalDensity mx = x_margin(f, n);
        CHECK(std::abs(mx.total - 1.0) <= 1e-9);
        CHECK_FALSE(mx.leakage_warning);
        const MarginalDensity my = y_margin(f, n);
        CHECK(std::abs(my.total - 1.0) <= 1e-9);
    }
}

TEST_CASE("narrow grids raise the leakage flag") {
    const Grid1D narrow = Grid1D::symmetric(2.0, 128);
    const MarginalDensity m = x_margin(basis_state(1, 0), 0, narrow, narrow);
    CHECK(m.leakage_warning);
    CHECK(m.leakage > 1e-3);
}

TEST_CASE("margin moments match operator expectations") {
    const double r = 1.0 / std::sqrt(2.0);

    // first moment of the x margin picks up the mean position
    const FockVector fx = two_level(r, r);
    const MarginalDensity mx = x_margin(fx, 0);
    CHECK(std::abs(quadrature_moment(mx, 1) - r) <= 1e-9);

    // the same state has zero mean momentum, while (|0> + i|1>)/sqrt(2)
    // has mean momentum 1/sqrt(2)
    const MarginalDensity my0 = y_margin(fx, 0);
    CHECK(std::abs(quadrature_moment(my0, 1)) <= 1e-9);
    const FockVector fy = two_level(r, Complex(0.0, r));
    const MarginalDensity my = y_margin(fy, 0);
    CHECK(std::abs(quadrature_moment(my, 1) - r) <= 1e-9);
}

TEST_CASE("parallel and serial margins agree bit for bit") {
    const FockVector f = two_level(0.6, Complex(0.0, 0.8));
    for (int n : {0, 4}) {
        const MarginalDensity a = x_margin(f, n);
        const MarginalDensity b = x_margin_serial(f, n);
        REQUIRE(a.values.size() == b.values.size());
        for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
        const MarginalDensity c = y_margin(f, n);
        const MarginalDensity d = y_margin_serial(f, n);
        for (std::size_t i = 0; i < c.values.size(); ++i) CHECK(c.values[i] == d.values[i]);
    }
}

TEST_CASE("vacuum phase-space density is the symmetric gaussian") {
    const Grid1D g = Grid1D::symmetric(12.0, 256);
    const GriddedDensity den = density(basis_state(1, 0), WeightSequence::delta(0).truncate(), g, g);
    CHECK(std::abs(den.total - 1.0) <= 1e-6);
    CHECK_FALSE(den.leakage_warning);

    // compare a handful of grid values against (2 pi)^{-1} exp(-(q^2+p^2)/2)
    for (int qi : {64, 128, 160}) {
        for (int pk : {100, 128}) {
            const double q = g.point(qi);
            const double p = g.point(pk);
            const double want = kInvSqrt2Pi * kInvSqrt2Pi * std::exp(-0.5 * (q * q + p * p));
            CHECK(std::abs(den.value(qi, pk) - want) <= 1e-10);
        }
    }
}

TEST_CASE("mixture density conserves mass up to the reported tail") {
    const Grid1D g = Grid1D::symmetric(12.0, 256);
    const TruncatedWeights kernel = WeightSequence::geometric(0.5).truncate();
    const FockVector f = two_level(0.8, 0.6);
    const GriddedDensity den = density(f, kernel, g, g);
    CHECK(den.kernel_tail <= 1e-10);
    CHECK(std::abs(den.total + den.leakage + den.kernel_tail - 1.0) <= 1e-12);
    CHECK(std::abs(den.leakage) <= 1e-6);
}

TEST_CASE("parallel and serial densities agree bit for bit") {
    const Grid1D g = Grid1D::symmetric(10.0, 64);
    const TruncatedWeights kernel = WeightSequence::explicit_list({0.5, 0.5}).truncate();
    const FockVector f = two_level(0.6, Complex(0.0, 0.8));
    const GriddedDensity a = density(f, kernel, g, g);
    const GriddedDensity b = density_serial(f, kernel, g, g);
    REQUIRE(a.values.size() == b.values.size());
    double max_diff = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        max_diff = std::max(max_diff, std::abs(a.values[i] - b.values[i]));
    CHECK(max_diff == 0.0);
}

TEST_CASE("density grid preconditions") {
    const FockVector vac = basis_state(1, 0);
    const TruncatedWeights kernel = WeightSequence::delta(0).truncate();
    const Grid1D odd{-8.0, 0.1, 160};  // not a power of two
    CHECK_THROWS_AS(density(vac, kernel, default_grid(), odd), std::invalid_argument);
    const Grid1D off{0.0, 0.125, 256};  // not symmetric about 0
    CHECK_THROWS_AS(density(vac, kernel, default_grid(), off), std::invalid_argument);

    FockVector unnormalized = two_level(1.0, 1.0);
    CHECK_THROWS_AS(density(unnormalized, kernel, default_grid(), default_grid()),
                    std::invalid_argument);
    CHECK_THROWS_AS(x_margin(unnormalized, 0), std::invalid_argument);
}
