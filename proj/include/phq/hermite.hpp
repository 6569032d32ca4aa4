#pragma once

#include "phq/grid.hpp"
#include "phq/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace phq {

// Orthonormal L^2(R) Hermite function h_n(t), Gaussian factor included.
// Evaluated with the normalized three-term recurrence
//   h_{m+1} = sqrt(2/(m+1)) t h_m - sqrt(m/(m+1)) h_{m-1},
// which keeps every intermediate on the order of the final value; the
// classical polynomial recurrence overflows near n = 150 and loses digits
// long before that.
double hermite_fn(int n, double t);

// h_0(t) .. h_nmax(t) in one recurrence pass; out must hold nmax+1 values.
void hermite_fn_row(int nmax, double t, std::span<double> out);

struct QuadratureRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // against exp(-t^2); they sum to sqrt(pi)
};

// Gauss-Hermite rule, exact for polynomials of degree <= 2*count-1 against
// exp(-t^2).  Newton iteration on the normalized recurrence, count in [1,200].
QuadratureRule gauss_hermite(int count);

// (Ff)(p) = (2*pi)^{-1/2} Integral e^{-ipt} f(t) dt, discretized on `grid` by
// the rectangle rule and evaluated on dual_grid(grid).  Unitary as a map
// between the two grids (discrete Parseval holds exactly up to rounding).
// Requires a power-of-two count and a grid symmetric about 0.
std::pair<std::vector<Complex>, Grid1D> fourier_unitary(std::span<const Complex> values,
                                                        const Grid1D& grid);

// The same discretized transform evaluated at one arbitrary frequency p;
// agrees with fourier_unitary at dual-grid points.
Complex fourier_at(std::span<const Complex> values, const Grid1D& grid, double p);

} // namespace phq
