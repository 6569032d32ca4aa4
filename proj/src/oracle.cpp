#include "phq/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace phq {

double quadrature_moment(const MarginalDensity& margin, int k) {
    if (k < 0) throw std::invalid_argument("quadrature_moment: order must be >= 0");
    const Grid1D& g = margin.grid;
    double acc = 0.0;
    for (int j = 0; j < g.count; ++j) {
        const double w = (j == 0 || j == g.count - 1) ? 0.5 : 1.0;
        acc += w * std::pow(g.point(j), k) * margin.values[static_cast<std::size_t>(j)];
    }
    return acc * g.step;
}

double quadrature_moment(const FockVector& state, int n, int k, Axis axis, const Grid1D& grid) {
    if (k > 8) throw std::invalid_argument("quadrature_moment: order must be <= 8");
    if (state.dim() > 33)
        throw std::invalid_argument("quadrature_moment: state spans more than 33 levels");
    const MarginalDensity margin =
        axis == Axis::X ? x_margin(state, n, grid, grid) : y_margin(state, n, grid, grid);
    return quadrature_moment(margin, k);
}

double density_moment_2d(const GriddedDensity& den, int k, Axis axis) {
    if (k < 0) throw std::invalid_argument("density_moment_2d: order must be >= 0");
    double acc = 0.0;
    for (int i = 0; i < den.q_grid.count; ++i) {
        const double q = den.q_grid.point(i);
        for (int j = 0; j < den.p_grid.count; ++j) {
            const double coord = axis == Axis::X ? q : den.p_grid.point(j);
            acc += std::pow(coord, k) * den.value(i, j);
        }
    }
    return acc * den.q_grid.step * den.p_grid.step;
}

double density_moment_2d(const FockVector& state, const TruncatedWeights& kernel, int k, Axis axis,
                         const Grid1D& q_grid, const Grid1D& p_grid) {
    return density_moment_2d(density(state, kernel, q_grid, p_grid), k, axis);
}

Complex ladder_expectation(int n, std::span<const LadderSymbol> word) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("ladder_expectation: level must be in [0,64]");
    if (word.size() > 12) throw std::invalid_argument("ladder_expectation: word longer than 12");

    const int top = n + static_cast<int>(word.size()) + 1;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Complex> v(static_cast<std::size_t>(top) + 1, 0.0);
    std::vector<Complex> next(static_cast<std::size_t>(top) + 1);
    v[static_cast<std::size_t>(n)] = 1.0;

    for (std::size_t i = word.size(); i-- > 0;) {
        const LadderSymbol s = word[i];
        for (int l = 0; l <= top; ++l) {
            const Complex from_below = l > 0 ? v[static_cast<std::size_t>(l) - 1] : Complex(0.0);
            const Complex from_above = l < top ? v[static_cast<std::size_t>(l) + 1] : Complex(0.0);
            const double up = std::sqrt(static_cast<double>(l));        // raising into l
            const double down = std::sqrt(static_cast<double>(l) + 1);  // lowering into l
            if (s == LadderSymbol::Q)
                next[static_cast<std::size_t>(l)] = (up * from_below + down * from_above) * inv_sqrt2;
            else
                next[static_cast<std::size_t>(l)] =
                    Complex(0.0, 1.0) * (up * from_below - down * from_above) * inv_sqrt2;
        }
        std::swap(v, next);
    }
    return v[static_cast<std::size_t>(n)];
}

} // namespace phq
