#pragma once

#include <vector>

namespace phq {

// Uniform 1D grid: point j is start + j*step for j = 0..count-1.
struct Grid1D {
    double start = 0.0;
    double step = 1.0;
    int count = 0;

    // Grid of `count` points with spacing 2*halfwidth/count, placed so that 0
    // is the point at index count/2.  This is the layout the discrete Fourier
    // transform expects.
    static Grid1D symmetric(double halfwidth, int count);

    double point(int j) const { return start + step * j; }
    double halfwidth() const { return 0.5 * step * count; }
    std::vector<double> points() const;

    bool symmetric_about_zero() const;
    bool power_of_two_count() const;
};

// Frequency grid fourier_unitary maps onto: same count, step 2*pi/(count*step),
// again symmetric about 0.
Grid1D dual_grid(const Grid1D& g);

// t in [-16, 16), 1024 points.  Every state in scope lives well inside this
// window; callers needing more resolution pass their own grid.
Grid1D default_grid();

} // namespace phq
