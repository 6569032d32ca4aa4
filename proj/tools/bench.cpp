#include "phq/density.hpp"
#include "phq/fock.hpp"
#include "phq/weights.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_of(const auto& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

void report(const char* name, double serial_s, double parallel_s, double diff) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx   max|delta| %.3g\n", name, serial_s * 1e3,
                parallel_s * 1e3, serial_s / parallel_s, diff);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    std::mt19937_64 rng(7);
    const phq::FockVector state = phq::random_state(16, rng);

    {
        phq::MarginalDensity ms, mp;
        const double ts = seconds_of([&] { ms = phq::x_margin_serial(state, 3); }, 5);
        const double tp = seconds_of([&] { mp = phq::x_margin(state, 3); }, 5);
        report("x_margin 1024", ts, tp, max_diff(ms.values, mp.values));
    }
    {
        phq::MarginalDensity ms, mp;
        const double ts = seconds_of([&] { ms = phq::y_margin_serial(state, 8); }, 5);
        const double tp = seconds_of([&] { mp = phq::y_margin(state, 8); }, 5);
        report("y_margin 1024", ts, tp, max_diff(ms.values, mp.values));
    }
    {
        const phq::Grid1D grid = phq::Grid1D::symmetric(16.0, 256);
        const phq::TruncatedWeights kernel = phq::WeightSequence::geometric(0.5).truncate();
        phq::GriddedDensity ds, dp;
        const double ts = seconds_of([&] { ds = phq::density_serial(state, kernel, grid, grid); }, 2);
        const double tp = seconds_of([&] { dp = phq::density(state, kernel, grid, grid); }, 2);
        report("density 256x256 geometric", ts, tp, max_diff(ds.values, dp.values));
    }
    return 0;
}
