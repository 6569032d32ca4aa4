#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phq/density.hpp"
#include "phq/fock.hpp"
#include "phq/oracle.hpp"
#include "phq/quantize.hpp"

#include <cmath>

using namespace phq;

namespace {

double block_diff(const FockOperator& a, const Eigen::MatrixXcd& ref, int rows) {
    return (a.mat - ref).topLeftCorner(rows, rows).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("polynomial degree") {
    CHECK(RealPolynomial({0.0, 1.0}).degree() == 1);
    CHECK(RealPolynomial({1.0, 0.0, 0.0}).degree() == 0);
    CHECK(RealPolynomial({0.0, 0.0}).is_zero());
}

TEST_CASE("domain tags") {
    CHECK(DomainTag{1, 0}.str() == "D(Q)");
    CHECK(DomainTag{0, 3}.str() == "D(P^3)");
    CHECK(DomainTag{2, 2}.str() == "D(Q^2) ∩ D(P^2)");
    CHECK(DomainTag{0, 0}.str() == "H");
}

TEST_CASE("linear observable maps to the position operator at every level") {
    const int dim = 16;
    const FockOperator q = build_qp(dim).first;
    for (int n : {0, 1, 7}) {
        const auto [op, tag] = quantize_x({0.0, 1.0}, n, dim);
        CHECK((op.mat - q.mat).cwiseAbs().maxCoeff() == 0.0);
        CHECK(tag.str() == "D(Q)");
    }
}

TEST_CASE("square picks up the level variance") {
    const int dim = 16;
    const FockOperator q = build_qp(dim).first;
    const auto [op, tag] = quantize_x({0.0, 0.0, 1.0}, 4, dim);
    const Eigen::MatrixXcd ref =
        (q.mat * q.mat).eval() + 4.5 * Eigen::MatrixXcd::Identity(dim, dim);
    CHECK(block_diff(op, ref, op.exact_rows) <= 1e-13);
    CHECK(tag.q_power == 2);
    CHECK(tag.p_power == 0);
}

TEST_CASE("cubic at the ground level") {
    const int dim = 16;
    const FockOperator q = build_qp(dim).first;
    const auto [op, tag] = quantize_x({0.0, -1.0, 0.0, 2.0}, 0, dim);
    const Eigen::MatrixXcd q3 = (q.mat * q.mat * q.mat).eval();
    const Eigen::MatrixXcd ref = 2.0 * q3 + 2.0 * q.mat;
    CHECK(op.exact_rows == dim - 3);
    CHECK(block_diff(op, ref, op.exact_rows) <= 1e-13);
    CHECK(tag.str() == "D(Q^3)");
}

TEST_CASE("quantization is linear in the observable") {
    const int dim = 12;
    const auto [oph, tagh] = quantize_x({1.0, 0.0, 2.0}, 3, dim);
    const auto [opg, tagg] = quantize_x({0.0, 1.0}, 3, dim);
    const auto [opsum, tags] = quantize_x({2.0, 3.0, 4.0}, 3, dim);
    const Eigen::MatrixXcd lin = 2.0 * oph.mat + 3.0 * opg.mat;
    CHECK((opsum.mat - lin).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(tags.q_power == 2);
}

TEST_CASE("complex linear combinations give the ladder operators") {
    const int dim = 16;
    const auto [raiser, lower] = build_ladder(dim);
    const double c = 1.0 / std::sqrt(2.0);
    for (int n : {0, 2}) {
        // (x + i y)/sqrt(2) lowers, (x - i y)/sqrt(2) raises
        const auto [down, tagd] = quantize_complex({0.0, c}, {0.0, c}, n, dim);
        CHECK((down.mat - lower.mat).cwiseAbs().maxCoeff() <= 1e-15);
        const auto [up, tagu] = quantize_complex({0.0, c}, {0.0, -c}, n, dim);
        CHECK((up.mat - raiser.mat).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(tagd.str() == "D(Q) ∩ D(P)");
    }
}

TEST_CASE("confining sum shifts the number operator") {
    const int dim = 32;
    const FockOperator num = build_number(dim);
    for (int n = 0; n <= 8; ++n) {
        const auto [op, tag] = quantize_sum({0.0, 0.0, 0.5}, {0.0, 0.0, 0.5}, n, dim);
        const Eigen::MatrixXcd ref =
            num.mat + static_cast<double>(n + 1) * Eigen::MatrixXcd::Identity(dim, dim);
        CHECK(block_diff(op, ref, op.exact_rows) <= 1e-10);
        CHECK(tag.str() == "D(Q^2) ∩ D(P^2)");
    }
}

TEST_CASE("quartic plus square at the ground level") {
    const int dim = 16;
    const auto [q, p] = build_qp(dim);
    const auto [op, tag] = quantize_sum({0.0, 0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}, 0, dim);
    const Eigen::MatrixXcd q2 = (q.mat * q.mat).eval();
    const Eigen::MatrixXcd ref = (q2 * q2).eval() + 3.0 * q2 + (p.mat * p.mat).eval() +
                                 1.25 * Eigen::MatrixXcd::Identity(dim, dim);
    CHECK(op.exact_rows == dim - 4);
    CHECK(block_diff(op, ref, op.exact_rows) <= 1e-12);
    CHECK(tag.str() == "D(Q^4) ∩ D(P^2)");
}

TEST_CASE("operator expectation equals the margin integral of the observable") {
    FockVector f;
    f.coeffs.resize(2);
    f.coeffs << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);

    const RealPolynomial h{1.0, 2.0, 0.0, 1.0};  // 1 + 2t + t^3
    for (int n : {0, 2}) {
        const auto [op, tag] = quantize_x(h, n, 24);
        const double lhs = expectation(f, op).real();
        const MarginalDensity m = x_margin(f, n);
        double rhs = 0.0;
        for (std::size_t l = 0; l < h.coeffs.size(); ++l)
            rhs += h.coeffs[l] * quadrature_moment(m, static_cast<int>(l));
        CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)) <= 1e-7);
    }
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(quantize_x({1.0}, 0, 8), std::invalid_argument);       // constant
    CHECK_THROWS_AS(quantize_x({0.0, 1.0}, -1, 8), std::invalid_argument); // bad level
    CHECK_THROWS_AS(quantize_x({0.0, 0.0, 1.0}, 0, 2), std::invalid_argument); // dim too small
    // odd degree or sign-indefinite leading term cannot be confining
    CHECK_THROWS_AS(quantize_sum({0.0, 1.0}, {0.0, 0.0, 1.0}, 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(quantize_sum({0.0, 0.0, -1.0}, {0.0, 0.0, 1.0}, 0, 8), std::invalid_argument);
}
