#include "phq/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phq {

Grid1D Grid1D::symmetric(double halfwidth, int count) {
    if (count < 2) throw std::invalid_argument("Grid1D::symmetric: count must be >= 2");
    if (!(halfwidth > 0.0)) throw std::invalid_argument("Grid1D::symmetric: halfwidth must be > 0");
    const double step = 2.0 * halfwidth / count;
    return Grid1D{-step * (count / 2), step, count};
}

std::vector<double> Grid1D::points() const {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = point(j);
    return out;
}

bool Grid1D::symmetric_about_zero() const {
    return std::abs(start + step * (count / 2)) <= 1e-9 * step;
}

bool Grid1D::power_of_two_count() const {
    return count > 0 && (count & (count - 1)) == 0;
}

Grid1D dual_grid(const Grid1D& g) {
    if (g.count < 2) throw std::invalid_argument("dual_grid: grid must have at least 2 points");
    const double step = 2.0 * std::numbers::pi / (g.count * g.step);
    return Grid1D{-step * (g.count / 2), step, g.count};
}

Grid1D default_grid() { return Grid1D::symmetric(16.0, 1024); }

} // namespace phq
