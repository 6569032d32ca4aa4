#pragma once

#include "phq/types.hpp"

#include <Eigen/Dense>

#include <random>
#include <span>
#include <utility>

namespace phq {

// Dense operator on the truncated number basis {|0>, ..., |dim-1>}.  Row is
// the output level, column the input level.
//
// exact_rows counts the leading basis vectors whose image under the truncated
// matrix coincides with the untruncated action: matrix elements involving
// only levels < exact_rows are those of the full operator.  Truncation makes
// the trailing block unreliable (e.g. the commutator [Q,P] picks up a rank-one
// defect in the last row/column), so consumers must restrict statements to
// the trusted block.
struct FockOperator {
    Eigen::MatrixXcd mat;
    int exact_rows = 0;

    int dim() const { return static_cast<int>(mat.rows()); }
    Eigen::MatrixXcd trusted_block() const { return mat.topLeftCorner(exact_rows, exact_rows); }
};

struct FockVector {
    Eigen::VectorXcd coeffs;

    int dim() const { return static_cast<int>(coeffs.size()); }
    double norm2() const { return coeffs.squaredNorm(); }
    bool normalized(double tol = 1e-9) const;
};

FockOperator fock_identity(int dim);

// Raising and lowering operators: raising |n> = sqrt(n+1) |n+1> (exact on the
// first dim-1 levels, the top one is annihilated by truncation), lowering is
// its adjoint and is exact on all dim levels.  dim >= 2.
std::pair<FockOperator, FockOperator> build_ladder(int dim);

// Position/momentum pair Q = (raising+lowering)/sqrt(2), P = i(raising-lowering)/sqrt(2).
std::pair<FockOperator, FockOperator> build_qp(int dim);

// Number operator diag(0, 1, ..., dim-1).
FockOperator build_number(int dim);

// How far the operator can raise a basis vector: max(row - col) over nonzero
// entries, 0 for diagonal or lowering-only operators.
int raise_bandwidth(const FockOperator& a);

// Operator algebra with exact_rows propagation.  For a product A*B the result
// is trusted on level n when B is trusted there and A is trusted on every
// level B can reach from n, i.e.
//   exact_rows(A*B) = max(0, min(exact_rows(B), exact_rows(A) - raise_bandwidth(B))).
FockOperator operator*(const FockOperator& a, const FockOperator& b);
FockOperator operator+(const FockOperator& a, const FockOperator& b);
FockOperator operator-(const FockOperator& a, const FockOperator& b);
FockOperator operator*(Complex c, const FockOperator& a);
FockOperator operator*(double c, const FockOperator& a);

// c[0] I + c[1] A + ... + c[k] A^k by Horner's scheme; k multiplications, so
// exact_rows drops by k * raise_bandwidth(A).
FockOperator matrix_polynomial(std::span<const double> coeffs, const FockOperator& a);

// <n| A_q^m |n> where A_q is the position operator truncated at dimension
// n+m+1, which is large enough that the truncated power acts exactly.
// Exactly 0 for odd m (the power never returns to level n), > 0 for even m.
double q_moment(int n, int m);

FockVector basis_state(int dim, int n);
FockVector embed(const FockVector& v, int dim);

// <v|A|v>; v is zero-padded when A is larger.
Complex expectation(const FockVector& v, const FockOperator& a);

// Normalized state with Gaussian random coefficients on levels 0..span_dim-1.
FockVector random_state(int span_dim, std::mt19937_64& rng);

} // namespace phq
