#pragma once

#include "phq/fock.hpp"
#include "phq/types.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace phq {

// Real polynomial a_0 + a_1 t + ... + a_k t^k, ascending coefficients.
struct RealPolynomial {
    std::vector<double> coeffs;

    RealPolynomial(std::initializer_list<double> c) : coeffs(c) {}
    explicit RealPolynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    // Degree after ignoring trailing zero coefficients; -1 for the zero
    // polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
};

// Natural domain of the assembled operator, rendered as an intersection of
// powers of the position and momentum operators, e.g. "D(Q^2) ∩ D(P^4)".
// Zero powers are omitted; both zero renders the whole space "H".
struct DomainTag {
    int q_power = 0;
    int p_power = 0;
    std::string str() const;
};

// Quantization of the classical observable h(x): substitute for each power
// x^l the level-n moment polynomial p_l applied to Q.  Linear in h; degree
// must be >= 1 and dim must exceed it.
std::pair<FockOperator, DomainTag> quantize_x(const RealPolynomial& h, int n, int dim);

// Quantization of h1(x) + i h2(y): the x part lands on Q, the y part on P.
// With h1 = t/sqrt(2), h2 = +-t/sqrt(2) this reproduces the lowering and
// raising operators.
std::pair<FockOperator, DomainTag> quantize_complex(const RealPolynomial& h1,
                                                    const RealPolynomial& h2, int n, int dim);

// Quantization of h1(x) + h2(y) for confining observables; both polynomials
// must have even degree >= 2 with positive leading coefficient so the sum is
// bounded below.  With h1 = h2 = t^2/2 this gives the number operator shifted
// by n+1 on the trusted block.
std::pair<FockOperator, DomainTag> quantize_sum(const RealPolynomial& h1, const RealPolynomial& h2,
                                                int n, int dim);

} // namespace phq
