#pragma once

#include "phq/fock.hpp"
#include "phq/grid.hpp"
#include "phq/types.hpp"
#include "phq/weights.hpp"

#include <vector>

namespace phq {

// f(t_j) = sum_m c_m h_m(t_j) on the grid.
std::vector<Complex> sample_state(const FockVector& state, const Grid1D& grid);

// Overlap coefficient of f against the level-n window centered at phase-space
// point (q,p):
//   weyl_coefficient = e^{i q p / 2} (F h_n(.-q) f)(p)
// with F the unitary Fourier transform, discretized on `grid`.  For the
// vacuum window at n=0 this is (2 pi)^{-1/2} e^{-(q^2+p^2)/4} at the origin
// state, which pins both the phase and the normalization convention.
Complex weyl_coefficient(const FockVector& state, int n, double q, double p,
                         const Grid1D& grid = default_grid());

struct MarginalDensity {
    Axis axis = Axis::X;
    int level = 0;  // window index n
    Grid1D grid;
    std::vector<double> values;
    double total = 0.0;    // rectangle-rule mass
    double leakage = 0.0;  // 1 - total for a normalized state
    bool leakage_warning = false;  // grid too narrow, widen it
};

// x_margin(q) = Integral |h_n(t-q)|^2 |f(t)|^2 dt, the p-integrated density of
// the level-n window.  When out_grid and t_grid share the same step the
// translates h_n(t_j - q_i) live on one difference lattice and are tabulated
// once, which drops the cost from O(M N n) to O(M N + (M+N) n).
MarginalDensity x_margin(const FockVector& state, int n, const Grid1D& out_grid = default_grid(),
                         const Grid1D& t_grid = default_grid());

// Margin over the first variable; equals the x margin of the Fourier
// transformed state, whose coefficients are c_m (-i)^m (windows are Fourier
// eigenfunctions up to that phase, which drops out under |.|^2).
MarginalDensity y_margin(const FockVector& state, int n, const Grid1D& out_grid = default_grid(),
                         const Grid1D& t_grid = default_grid());

// Serial reference implementations: same arithmetic per output point, plain
// loop instead of the OpenMP driver.  Kept for tests and the benchmark.
MarginalDensity x_margin_serial(const FockVector& state, int n,
                                const Grid1D& out_grid = default_grid(),
                                const Grid1D& t_grid = default_grid());
MarginalDensity y_margin_serial(const FockVector& state, int n,
                                const Grid1D& out_grid = default_grid(),
                                const Grid1D& t_grid = default_grid());

struct GriddedDensity {
    Grid1D q_grid, p_grid;
    std::vector<double> values;  // row-major, q rows of p_grid.count values
    double total = 0.0;          // rectangle-rule mass over the grid
    double kernel_tail = 0.0;    // kernel mass dropped by truncation
    double leakage = 0.0;        // 1 - kernel_tail - total
    bool leakage_warning = false;

    double value(int qi, int pk) const {
        return values[static_cast<std::size_t>(qi) * p_grid.count + pk];
    }
};

// Phase-space density sum_n w_n |weyl_coefficient(f, n, q, p)|^2 over the
// whole q x p grid.  One FFT row per (q, kernel level): the state is sampled
// on an internal t grid four times finer than the dual of p_grid (same p
// step, so the p grid embeds in the internal dual grid; the oversampling
// buys frequency headroom for high windows).  p_grid needs a power-of-two
// count, symmetric about 0; q_grid is unconstrained.
GriddedDensity density(const FockVector& state, const TruncatedWeights& kernel,
                       const Grid1D& q_grid = default_grid(),
                       const Grid1D& p_grid = default_grid());
GriddedDensity density_serial(const FockVector& state, const TruncatedWeights& kernel,
                              const Grid1D& q_grid = default_grid(),
                              const Grid1D& p_grid = default_grid());

} // namespace phq
