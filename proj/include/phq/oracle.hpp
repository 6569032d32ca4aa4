#pragma once

#include "phq/density.hpp"
#include "phq/fock.hpp"
#include "phq/grid.hpp"
#include "phq/types.hpp"
#include "phq/weights.hpp"

#include <span>

namespace phq {

// Cross-check routes that deliberately avoid the production code paths: the
// moment quadratures integrate grids directly, and the ladder oracle applies
// operator words to number states without ever forming a matrix.

// Trapezoid moment Integral q^k margin(q) dq of an already computed margin.
double quadrature_moment(const MarginalDensity& margin, int k);

// Convenience form: computes the level-n margin of the state first.
// k <= 8 and states spanning at most 33 levels keep the default grid accurate.
double quadrature_moment(const FockVector& state, int n, int k, Axis axis,
                         const Grid1D& grid = default_grid());

// Rectangle-rule moment of the 2D density along one axis.
double density_moment_2d(const GriddedDensity& den, int k, Axis axis);
double density_moment_2d(const FockVector& state, const TruncatedWeights& kernel, int k, Axis axis,
                         const Grid1D& q_grid = default_grid(),
                         const Grid1D& p_grid = default_grid());

enum class LadderSymbol { Q, P };

// <n| S_1 S_2 ... S_m |n> evaluated by streaming the word through a window of
// level amplitudes; the rightmost symbol acts first.  Truncation-free, so
// e.g. the commutator word gives exactly i for every level.
Complex ladder_expectation(int n, std::span<const LadderSymbol> word);

} // namespace phq
