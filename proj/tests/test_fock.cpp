#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phq/fock.hpp"

#include <cmath>
#include <random>

using namespace phq;

TEST_CASE("ladder matrices") {
    auto [raising, lowering] = build_ladder(5);
    CHECK(raising.exact_rows == 4);
    CHECK(lowering.exact_rows == 5);
    CHECK(raising.mat(1, 0).real() == doctest::Approx(1.0));
    CHECK(raising.mat(4, 3).real() == doctest::Approx(2.0));
    CHECK(lowering.mat(3, 4).real() == doctest::Approx(2.0));
    // adjoint pair
    CHECK((raising.mat - lowering.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(build_ladder(1), std::invalid_argument);
}

TEST_CASE("position and momentum are hermitian with bandwidth one") {
    auto [q, p] = build_qp(8);
    CHECK(q.exact_rows == 7);
    CHECK(p.exact_rows == 7);
    CHECK((q.mat - q.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((p.mat - p.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(raise_bandwidth(q) == 1);
    CHECK(raise_bandwidth(p) == 1);
    CHECK(raise_bandwidth(build_number(8)) == 0);
}

TEST_CASE("number operator from ladder product") {
    const int d = 12;
    auto [raising, lowering] = build_ladder(d);
    const FockOperator n_from_ladder = raising * lowering;
    const FockOperator n = build_number(d);
    CHECK((n_from_ladder.mat - n.mat).cwiseAbs().maxCoeff() < 1e-14);
    // lowering acts exactly everywhere, raising on d-1 rows; the product
    // metadata follows the propagation rule.
    CHECK(n_from_ladder.exact_rows == d - 1);
}

TEST_CASE("exact_rows propagation through products") {
    const int d = 16;
    auto [q, p] = build_qp(d);
    FockOperator q2 = q * q;
    CHECK(q2.exact_rows == d - 2);
    FockOperator q4 = q2 * q2;
    // right factor q2 is exact on d-2 rows, can raise by 2, left is exact on
    // d-2: min(d-2, (d-2)-2) = d-4.
    CHECK(q4.exact_rows == d - 4);
    CHECK(raise_bandwidth(q4) == 4);

    // Sums take the weaker guarantee.
    CHECK((q2 + fock_identity(d)).exact_rows == d - 2);
    CHECK((Complex(0.0, 2.0) * q2).exact_rows == d - 2);
}

TEST_CASE("commutator truncation defect sits in the last row and column") {
    const int d = 9;
    auto [q, p] = build_qp(d);
    const Eigen::MatrixXcd comm = q.mat * p.mat - p.mat * q.mat;
    for (int r = 0; r + 1 < d; ++r)
        for (int c = 0; c + 1 < d; ++c) {
            const Complex want = r == c ? Complex(0.0, 1.0) : Complex(0.0);
            CHECK(std::abs(comm(r, c) - want) < 1e-14);
        }
    CHECK(std::abs(comm(d - 1, d - 1) - Complex(0.0, 1.0 - d)) < 1e-13);
}

TEST_CASE("diagonal position moments") {
    // frozen ladder-walk references
    CHECK(q_moment(0, 2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(q_moment(0, 4) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(q_moment(0, 6) == doctest::Approx(1.875).epsilon(1e-14));
    CHECK(q_moment(0, 8) == doctest::Approx(6.5625).epsilon(1e-14));
    CHECK(q_moment(1, 2) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(q_moment(1, 6) == doctest::Approx(13.125).epsilon(1e-14));
    CHECK(q_moment(3, 2) == doctest::Approx(3.5).epsilon(1e-14));
    CHECK(q_moment(2, 4) == doctest::Approx(9.75).epsilon(1e-14));
    CHECK(q_moment(5, 4) == doctest::Approx(45.75).epsilon(1e-14));
    CHECK(q_moment(8, 6) == doctest::Approx(1561.875).epsilon(1e-13));
    CHECK(q_moment(16, 12) == doctest::Approx(306158899.921875).epsilon(1e-12));

    SUBCASE("odd moments vanish identically") {
        for (int n : {0, 1, 4, 9})
            for (int m : {1, 3, 5, 7, 11}) CHECK(q_moment(n, m) == 0.0);
    }
    CHECK(q_moment(3, 0) == 1.0);
    CHECK_THROWS_AS(q_moment(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(q_moment(2, -1), std::invalid_argument);
}

TEST_CASE("matrix polynomial by horner") {
    const int d = 10;
    auto [q, p] = build_qp(d);
    const double c[] = {1.0, 0.0, 1.0};  // I + Q^2
    const FockOperator r = matrix_polynomial(c, q);
    const Eigen::MatrixXcd want = Eigen::MatrixXcd::Identity(d, d) + q.mat * q.mat;
    CHECK((r.mat - want).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(r.exact_rows == d - 2);
    CHECK_THROWS_AS(matrix_polynomial({}, q), std::invalid_argument);
}

TEST_CASE("states, embedding, expectations") {
    const FockVector v = basis_state(4, 2);
    CHECK(v.normalized());
    CHECK(embed(v, 7).dim() == 7);
    CHECK_THROWS_AS(embed(v, 3), std::invalid_argument);
    CHECK_THROWS_AS(basis_state(4, 4), std::invalid_argument);

    auto [q, p] = build_qp(8);
    // <2|Q^2|2> through the generic expectation path
    const FockOperator q2 = q * q;
    CHECK(expectation(v, q2).real() == doctest::Approx(2.5).epsilon(1e-14));

    std::mt19937_64 rng(11);
    const FockVector r = random_state(6, rng);
    CHECK(r.normalized(1e-12));
    const Complex e = expectation(r, q2);
    CHECK(std::abs(e.imag()) < 1e-14);  // hermitian operator
}
