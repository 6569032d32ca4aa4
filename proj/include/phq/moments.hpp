#pragma once

#include "phq/fock.hpp"
#include "phq/types.hpp"
#include "phq/weights.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace phq {

// Raised when a requested mixture moment does not exist because
// sum_n n^k w_n diverges (and, for the formal route, when even the
// coefficient series themselves diverge).
class DivergentMomentError : public std::domain_error {
public:
    explicit DivergentMomentError(const std::string& what) : std::domain_error(what) {}
};

// p_k(t) = <n| (t - Q)^k |n> expanded in powers of t.  Coefficients with odd
// k-l vanish identically, the others are strictly positive, and the leading
// coefficient is 1.
struct MomentPolynomial {
    int degree = 0;
    std::vector<double> coeffs;  // coeffs[l] multiplies t^l
    std::string kernel;          // weight description, e.g. "delta:3"
};

MomentPolynomial moment_polynomial(int n, int k);  // n >= 0, 1 <= k <= 12

// The polynomial applied to the truncated position (X) or momentum (Y)
// operator.  dim must exceed k so a nonempty trusted block survives.
FockOperator moment_operator(int n, int k, Axis axis, int dim);

// Whether sum_n n^k w_n converges: always for finite lists and geometric
// tails, and exactly when k < alpha - 1 for the power law.
bool nseries_converges(const WeightSequence& w, int k);

// Mixture coefficients s[l] = binom(k,l) sum_n w_n <n|Q^{k-l}|n>.  Throws
// DivergentMomentError when nseries_converges is false.  For a single unit
// weight at n this reduces to moment_polynomial(n, k).
std::vector<double> s_coefficients(const WeightSequence& w, int k);

FockOperator mixture_moment_operator(const WeightSequence& w, int k, Axis axis, int dim);

// Opt-in route for kernels whose k-th moment diverges but whose coefficient
// series all converge (power law with every even gap k-l satisfying
// (k-l)/2 < alpha-1).  The polynomial still defines a selfadjoint operator,
// but the corresponding observable is square-integrable only for the zero
// vector, which domain_note records.
struct FormalMomentOperator {
    FockOperator op;
    std::vector<double> s;
    std::string domain_note;
};

FormalMomentOperator formal_mixture_moment_operator(const WeightSequence& w, int k, Axis axis,
                                                    int dim);

// <n|Q^m|n> as a polynomial in n of degree m/2, valid for every n >= 0:
// Newton interpolation on the exact values at n = 0..m/2.  Ascending
// coefficients; odd m gives the zero polynomial.
std::vector<double> diagonal_moment_polynomial(int m);

// Least-squares fit of n -> <n|Q^{2k}|n> by a degree-k polynomial over an
// integer range; the residual certifies the polynomial growth law.
struct PolynomialFit {
    std::vector<double> coeffs;  // ascending powers of n
    double max_rel_residual = 0.0;
};

// 1 <= k <= 6, [n_lo, n_hi] within [k, k+32], at least k+1 sample points.
PolynomialFit q2k_polynomial_check(int k, int n_lo, int n_hi);

} // namespace phq
