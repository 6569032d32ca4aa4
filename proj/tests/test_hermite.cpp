#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phq/hermite.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace phq;

namespace {
// Reference values computed with 30-digit arithmetic from the classical
// Hermite polynomial definition, frozen here.
struct Sample {
    int n;
    double t;
    double value;
};
const Sample kSamples[] = {
    {0, 0.0, 0.75112554446494248},
    {1, 1.0, 0.64428836511347518},
    {5, 0.7, 0.32729676349851069},
    {7, -1.3, -0.40609866425190538},
    {30, 2.5, -0.27662955450847443},
    {100, 1.0, -0.0060679802386717753},
};
} // namespace

TEST_CASE("hermite function values") {
    for (const Sample& s : kSamples)
        CHECK(hermite_fn(s.n, s.t) == doctest::Approx(s.value).epsilon(1e-13));
    CHECK_THROWS_AS(hermite_fn(-1, 0.0), std::invalid_argument);
}

TEST_CASE("hermite row matches single evaluations") {
    std::vector<double> row(31);
    hermite_fn_row(30, 2.5, row);
    CHECK(row[0] == hermite_fn(0, 2.5));
    CHECK(row[17] == hermite_fn(17, 2.5));
    CHECK(row[30] == hermite_fn(30, 2.5));
}

TEST_CASE("hermite orthonormality under gauss-hermite") {
    // h_a h_b e^{+t^2} against the e^{-t^2} rule integrates the polynomial
    // part exactly once the rule order covers a+b.
    const QuadratureRule rule = gauss_hermite(40);
    for (int a : {0, 3, 11}) {
        for (int b : {0, 3, 11, 14}) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double t = rule.nodes[i];
                acc += rule.weights[i] * hermite_fn(a, t) * hermite_fn(b, t) * std::exp(t * t);
            }
            CHECK(acc == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("gauss-hermite two-point rule") {
    const QuadratureRule rule = gauss_hermite(2);
    CHECK(rule.nodes[0] == doctest::Approx(-0.70710678118654752).epsilon(1e-15));
    CHECK(rule.nodes[1] == doctest::Approx(0.70710678118654752).epsilon(1e-15));
    CHECK(rule.weights[0] == doctest::Approx(0.88622692545275801).epsilon(1e-15));
    CHECK(rule.weights[1] == doctest::Approx(0.88622692545275801).epsilon(1e-15));
}

TEST_CASE("gauss-hermite weight sum and polynomial exactness") {
    for (int count : {1, 2, 7, 40, 128}) {
        const QuadratureRule rule = gauss_hermite(count);
        double sum = 0.0;
        for (double w : rule.weights) sum += w;
        CHECK(sum == doctest::Approx(1.772453850905516).epsilon(1e-14));
    }
    // Integral t^6 e^{-t^2} dt = 15 sqrt(pi) / 8, exact for count >= 4.
    const QuadratureRule rule = gauss_hermite(4);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], 6);
    CHECK(acc == doctest::Approx(3.3233509704478426).epsilon(1e-13));
    CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite(500), std::invalid_argument);
}

namespace {
std::vector<Complex> sample_hermite(int n, const Grid1D& g) {
    std::vector<Complex> out(static_cast<std::size_t>(g.count));
    for (int j = 0; j < g.count; ++j) out[static_cast<std::size_t>(j)] = hermite_fn(n, g.point(j));
    return out;
}
} // namespace

TEST_CASE("fourier eigenfunctions") {
    // F h_n = (-i)^n h_n with the e^{-ipt} unitary convention.
    const Grid1D g = default_grid();
    const Grid1D dual = dual_grid(g);
    for (int n : {0, 1, 2, 5, 12}) {
        const auto [spec, dg] = fourier_unitary(sample_hermite(n, g), g);
        CHECK(dg.step == doctest::Approx(dual.step).epsilon(1e-15));
        const Complex phase = std::pow(Complex(0.0, -1.0), n);
        double err = 0.0;
        for (int k = 0; k < g.count; ++k) {
            const Complex want = phase * hermite_fn(n, dg.point(k));
            err = std::max(err, std::abs(spec[static_cast<std::size_t>(k)] - want));
        }
        CHECK(err < 1e-12);
    }
}

TEST_CASE("fourier unitarity") {
    const Grid1D g = Grid1D::symmetric(12.0, 256);
    std::vector<Complex> f(static_cast<std::size_t>(g.count));
    for (int j = 0; j < g.count; ++j) {
        const double t = g.point(j);
        f[static_cast<std::size_t>(j)] = Complex(hermite_fn(2, t), 0.3 * hermite_fn(5, t));
    }
    double in_norm = 0.0;
    for (const Complex& v : f) in_norm += std::norm(v);
    in_norm *= g.step;

    const auto [spec, dual] = fourier_unitary(f, g);
    double out_norm = 0.0;
    for (const Complex& v : spec) out_norm += std::norm(v);
    out_norm *= dual.step;
    CHECK(out_norm == doctest::Approx(in_norm).epsilon(1e-13));
}

TEST_CASE("fourier_at agrees with the grid transform") {
    const Grid1D g = Grid1D::symmetric(12.0, 256);
    const auto f = sample_hermite(3, g);
    const auto [spec, dual] = fourier_unitary(f, g);
    for (int k : {10, 128, 200}) {
        const Complex direct = fourier_at(f, g, dual.point(k));
        CHECK(std::abs(direct - spec[static_cast<std::size_t>(k)]) < 1e-12);
    }
}

TEST_CASE("fourier grid preconditions") {
    const Grid1D bad_count{-5.0, 0.1, 100};  // not a power of two
    std::vector<Complex> v(100, Complex(1.0));
    CHECK_THROWS_AS(fourier_unitary(v, bad_count), std::invalid_argument);
    const Grid1D off_center{0.0, 0.1, 128};
    std::vector<Complex> v2(128, Complex(1.0));
    CHECK_THROWS_AS(fourier_unitary(v2, off_center), std::invalid_argument);
}
