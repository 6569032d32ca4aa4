#include "phq/density.hpp"

#include "phq/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phq {

namespace {

constexpr double kLeakageWarnLevel = 1e-4;
constexpr int kOversample = 4;

void check_weights(const TruncatedWeights& kernel, const char* who) {
    if (kernel.weights.empty()) throw std::invalid_argument(std::string(who) + ": empty kernel");
    double sum = 0.0;
    int prev = -1;
    for (const auto& [n, w] : kernel.weights) {
        if (n <= prev) throw std::invalid_argument(std::string(who) + ": kernel levels not ascending");
        if (w < 0.0) throw std::invalid_argument(std::string(who) + ": negative kernel weight");
        prev = n;
        sum += w;
    }
    if (sum > 1.0 + 1e-12)
        throw std::invalid_argument(std::string(who) + ": kernel weights sum to more than 1");
}

void require_normalized(const FockVector& state, const char* who) {
    if (!state.normalized())
        throw std::invalid_argument(std::string(who) + ": state must be normalized");
}

// Coefficient twist implementing the unitary Fourier transform on the span of
// the windows: h_m maps to (-i)^m h_m.
FockVector fourier_state(const FockVector& state) {
    FockVector out{state.coeffs};
    static const Complex phase[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    for (int m = 0; m < out.dim(); ++m) out.coeffs(m) *= phase[m % 4];
    return out;
}

struct MarginWorkspace {
    std::vector<double> f2;       // |f(t_j)|^2
    std::vector<double> window2;  // h_n^2 on the difference lattice (fast path)
    bool lattice = false;
    double offset = 0.0;  // t_0 - q_0 when on the lattice
};

double margin_point(const MarginWorkspace& ws, int n, const Grid1D& out_grid,
                    const Grid1D& t_grid, int i) {
    const int nt = t_grid.count;
    double acc = 0.0;
    if (ws.lattice) {
        // d = t_j - q_i = offset + (j - i) step; table index j - i + (M-1).
        const double* table = ws.window2.data() + (out_grid.count - 1 - i);
        for (int j = 0; j < nt; ++j) acc += table[j] * ws.f2[static_cast<std::size_t>(j)];
    } else {
        const double q = out_grid.point(i);
        for (int j = 0; j < nt; ++j) {
            const double h = hermite_fn(n, t_grid.point(j) - q);
            acc += h * h * ws.f2[static_cast<std::size_t>(j)];
        }
    }
    return acc * t_grid.step;
}

MarginalDensity margin_impl(const FockVector& state, int n, Axis axis, const Grid1D& out_grid,
                            const Grid1D& t_grid, bool parallel) {
    if (n < 0) throw std::invalid_argument("margin: window index must be >= 0");
    if (out_grid.count < 2 || t_grid.count < 2)
        throw std::invalid_argument("margin: grids must have at least 2 points");
    require_normalized(state, "margin");

    const FockVector eff = axis == Axis::X ? state : fourier_state(state);
    const std::vector<Complex> f = sample_state(eff, t_grid);

    MarginWorkspace ws;
    ws.f2.resize(static_cast<std::size_t>(t_grid.count));
    for (int j = 0; j < t_grid.count; ++j) ws.f2[static_cast<std::size_t>(j)] = std::norm(f[static_cast<std::size_t>(j)]);

    ws.lattice = out_grid.step == t_grid.step;
    if (ws.lattice) {
        ws.offset = t_grid.start - out_grid.start;
        const int m = out_grid.count;
        const std::size_t lattice_size = static_cast<std::size_t>(m) + t_grid.count - 1;
        ws.window2.resize(lattice_size);
        for (std::size_t u = 0; u < lattice_size; ++u) {
            const double d = ws.offset + (static_cast<double>(u) - (m - 1)) * t_grid.step;
            const double h = hermite_fn(n, d);
            ws.window2[u] = h * h;
        }
    }

    MarginalDensity out;
    out.axis = axis;
    out.level = n;
    out.grid = out_grid;
    out.values.resize(static_cast<std::size_t>(out_grid.count));

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < out_grid.count; ++i)
            out.values[static_cast<std::size_t>(i)] = margin_point(ws, n, out_grid, t_grid, i);
    } else {
        for (int i = 0; i < out_grid.count; ++i)
            out.values[static_cast<std::size_t>(i)] = margin_point(ws, n, out_grid, t_grid, i);
    }

    double total = 0.0;
    for (double v : out.values) total += v;
    out.total = total * out_grid.step;
    out.leakage = 1.0 - out.total;
    out.leakage_warning = std::abs(out.leakage) > kLeakageWarnLevel;
    return out;
}

struct DensityPlan {
    Grid1D t_grid;           // internal sampling grid
    int dual_offset = 0;     // p_grid start within the internal dual grid
    int n_max = 0;
};

DensityPlan plan_density(const TruncatedWeights& kernel, const Grid1D& p_grid) {
    if (!p_grid.power_of_two_count())
        throw std::invalid_argument("density: p grid count must be a power of two");
    if (!p_grid.symmetric_about_zero())
        throw std::invalid_argument("density: p grid must be symmetric about 0");

    DensityPlan plan;
    const int n_int = p_grid.count * kOversample;
    // Dual relation: step_t * step_p = 2 pi / n_int, so the internal dual grid
    // has exactly the p step and contains p_grid as its centered subrange.
    const double step_t = 2.0 * std::numbers::pi / (n_int * p_grid.step);
    plan.t_grid = Grid1D{-step_t * (n_int / 2), step_t, n_int};
    plan.dual_offset = (n_int - p_grid.count) / 2;
    plan.n_max = kernel.max_level();
    return plan;
}

// One q row: all kernel windows translated to q, one FFT per window.
void density_row(const DensityPlan& plan, const TruncatedWeights& kernel,
                 const std::vector<Complex>& f, const Grid1D& p_grid, double q, double* row_out) {
    const int nt = plan.t_grid.count;
    const int stride = plan.n_max + 1;
    std::vector<double> windows(static_cast<std::size_t>(nt) * stride);
    for (int j = 0; j < nt; ++j)
        hermite_fn_row(plan.n_max, plan.t_grid.point(j) - q,
                       {windows.data() + static_cast<std::size_t>(j) * stride,
                        static_cast<std::size_t>(stride)});

    for (int k = 0; k < p_grid.count; ++k) row_out[k] = 0.0;
    std::vector<Complex> g(static_cast<std::size_t>(nt));
    for (const auto& [n, w] : kernel.weights) {
        for (int j = 0; j < nt; ++j)
            g[static_cast<std::size_t>(j)] =
                windows[static_cast<std::size_t>(j) * stride + n] * f[static_cast<std::size_t>(j)];
        auto [spec, dual] = fourier_unitary(g, plan.t_grid);
        for (int k = 0; k < p_grid.count; ++k)
            row_out[k] += w * std::norm(spec[static_cast<std::size_t>(k + plan.dual_offset)]);
    }
}

GriddedDensity density_impl(const FockVector& state, const TruncatedWeights& kernel,
                            const Grid1D& q_grid, const Grid1D& p_grid, bool parallel) {
    check_weights(kernel, "density");
    require_normalized(state, "density");
    if (q_grid.count < 1) throw std::invalid_argument("density: empty q grid");

    const DensityPlan plan = plan_density(kernel, p_grid);
    const std::vector<Complex> f = sample_state(state, plan.t_grid);

    GriddedDensity out;
    out.q_grid = q_grid;
    out.p_grid = p_grid;
    out.kernel_tail = kernel.tail_mass;
    out.values.resize(static_cast<std::size_t>(q_grid.count) * p_grid.count);

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < q_grid.count; ++i)
            density_row(plan, kernel, f, p_grid, q_grid.point(i),
                        out.values.data() + static_cast<std::size_t>(i) * p_grid.count);
    } else {
        for (int i = 0; i < q_grid.count; ++i)
            density_row(plan, kernel, f, p_grid, q_grid.point(i),
                        out.values.data() + static_cast<std::size_t>(i) * p_grid.count);
    }

    double total = 0.0;
    for (double v : out.values) total += v;
    out.total = total * q_grid.step * p_grid.step;
    out.leakage = 1.0 - out.kernel_tail - out.total;
    out.leakage_warning = std::abs(out.leakage) > kLeakageWarnLevel;
    return out;
}

} // namespace

std::vector<Complex> sample_state(const FockVector& state, const Grid1D& grid) {
    if (state.dim() < 1) throw std::invalid_argument("sample_state: empty state");
    const int nmax = state.dim() - 1;
    std::vector<Complex> out(static_cast<std::size_t>(grid.count));
    std::vector<double> row(static_cast<std::size_t>(nmax) + 1);
    for (int j = 0; j < grid.count; ++j) {
        hermite_fn_row(nmax, grid.point(j), row);
        Complex acc = 0.0;
        for (int m = 0; m <= nmax; ++m) acc += state.coeffs(m) * row[static_cast<std::size_t>(m)];
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

Complex weyl_coefficient(const FockVector& state, int n, double q, double p, const Grid1D& grid) {
    if (n < 0) throw std::invalid_argument("weyl_coefficient: window index must be >= 0");
    const std::vector<Complex> f = sample_state(state, grid);
    std::vector<Complex> g(static_cast<std::size_t>(grid.count));
    for (int j = 0; j < grid.count; ++j)
        g[static_cast<std::size_t>(j)] = hermite_fn(n, grid.point(j) - q) * f[static_cast<std::size_t>(j)];
    return std::polar(1.0, 0.5 * q * p) * fourier_at(g, grid, p);
}

MarginalDensity x_margin(const FockVector& state, int n, const Grid1D& out_grid,
                         const Grid1D& t_grid) {
    return margin_impl(state, n, Axis::X, out_grid, t_grid, true);
}

MarginalDensity y_margin(const FockVector& state, int n, const Grid1D& out_grid,
                         const Grid1D& t_grid) {
    return margin_impl(state, n, Axis::Y, out_grid, t_grid, true);
}

MarginalDensity x_margin_serial(const FockVector& state, int n, const Grid1D& out_grid,
                                const Grid1D& t_grid) {
    return margin_impl(state, n, Axis::X, out_grid, t_grid, false);
}

MarginalDensity y_margin_serial(const FockVector& state, int n, const Grid1D& out_grid,
                                const Grid1D& t_grid) {
    return margin_impl(state, n, Axis::Y, out_grid, t_grid, false);
}

GriddedDensity density(const FockVector& state, const TruncatedWeights& kernel,
                       const Grid1D& q_grid, const Grid1D& p_grid) {
    return density_impl(state, kernel, q_grid, p_grid, true);
}

GriddedDensity density_serial(const FockVector& state, const TruncatedWeights& kernel,
                              const Grid1D& q_grid, const Grid1D& p_grid) {
    return density_impl(state, kernel, q_grid, p_grid, false);
}

} // namespace phq
