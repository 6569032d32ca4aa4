#include "phq/hermite.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace phq {

namespace {

// pi^{-1/4}, the value of h_0 at 0 before the Gaussian factor.
constexpr double kPiQuarterInv = 0.7511255444649425;

// Thin wrapper around an FFTW plan for one transform size.  Plan creation is
// not thread-safe, execution through fftw_execute_dft is, so plans are cached
// per size behind a mutex and shared across threads.
class Dft {
public:
    explicit Dft(int n) : n_(n) {
        std::vector<Complex> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
        plan_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                 reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan_) throw std::runtime_error("Dft: fftw plan creation failed");
    }
    ~Dft() { fftw_destroy_plan(plan_); }
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;

    // out[a] = sum_j in[j] exp(-2 pi i a j / n)
    void forward(const Complex* in, Complex* out) const {
        fftw_execute_dft(plan_, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                         reinterpret_cast<fftw_complex*>(out));
    }

    int size() const { return n_; }

private:
    int n_;
    fftw_plan plan_;
};

const Dft& dft_for(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Dft>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Dft>(n);
    return *slot;
}

} // namespace

double hermite_fn(int n, double t) {
    if (n < 0) throw std::invalid_argument("hermite_fn: n must be >= 0");
    const double h0 = kPiQuarterInv * std::exp(-0.5 * t * t);
    if (n == 0) return h0;
    double prev = h0;
    double cur = std::numbers::sqrt2 * t * h0;
    for (int m = 1; m < n; ++m) {
        const double next =
            std::sqrt(2.0 / (m + 1)) * t * cur - std::sqrt(static_cast<double>(m) / (m + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void hermite_fn_row(int nmax, double t, std::span<double> out) {
    if (nmax < 0) throw std::invalid_argument("hermite_fn_row: nmax must be >= 0");
    if (out.size() < static_cast<std::size_t>(nmax) + 1)
        throw std::invalid_argument("hermite_fn_row: output span too small");
    out[0] = kPiQuarterInv * std::exp(-0.5 * t * t);
    if (nmax == 0) return;
    out[1] = std::numbers::sqrt2 * t * out[0];
    for (int m = 1; m < nmax; ++m)
        out[static_cast<std::size_t>(m) + 1] =
            std::sqrt(2.0 / (m + 1)) * t * out[static_cast<std::size_t>(m)] -
            std::sqrt(static_cast<double>(m) / (m + 1)) * out[static_cast<std::size_t>(m) - 1];
}

QuadratureRule gauss_hermite(int count) {
    if (count < 1 || count > 200)
        throw std::invalid_argument("gauss_hermite: count must be in [1,200]");
    const double eps = 1e-14;
    const int max_iter = 100;

    std::vector<double> x(static_cast<std::size_t>(count)), w(static_cast<std::size_t>(count));
    const int m = (count + 1) / 2;
    double z = 0.0;
    double pp = 0.0;

    for (int i = 0; i < m; ++i) {
        // Initial guesses for the roots in descending order.
        if (i == 0)
            z = std::sqrt(2.0 * count + 1.0) - 1.85575 * std::pow(2.0 * count + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(count), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[static_cast<std::size_t>(i) - 2];

        int its = 0;
        for (; its < max_iter; ++its) {
            // Evaluate the normalized Hermite polynomial (orthonormal against
            // exp(-t^2)) and use p' = sqrt(2n) p_{n-1} for the Newton step.
            double p1 = kPiQuarterInv;
            double p2 = 0.0;
            for (int j = 0; j < count; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * count) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        if (its == max_iter) throw std::runtime_error("gauss_hermite: Newton iteration stalled");

        x[static_cast<std::size_t>(i)] = z;
        x[static_cast<std::size_t>(count) - 1 - i] = -z;
        w[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
        w[static_cast<std::size_t>(count) - 1 - i] = w[static_cast<std::size_t>(i)];
    }

    std::reverse(x.begin(), x.end());
    std::reverse(w.begin(), w.end());
    return {std::move(x), std::move(w)};
}

std::pair<std::vector<Complex>, Grid1D> fourier_unitary(std::span<const Complex> values,
                                                        const Grid1D& grid) {
    if (!grid.power_of_two_count())
        throw std::invalid_argument("fourier_unitary: grid count must be a power of two");
    if (!grid.symmetric_about_zero())
        throw std::invalid_argument("fourier_unitary: grid must be symmetric about 0");
    if (static_cast<int>(values.size()) != grid.count)
        throw std::invalid_argument("fourier_unitary: values size does not match grid");

    const int n = grid.count;
    std::vector<Complex> spectrum(static_cast<std::size_t>(n));
    dft_for(n).forward(values.data(), spectrum.data());

    // With t_j = (j - n/2) step, p_k = (k - n/2) step_p and step_p * step = 2 pi / n,
    // the exponent splits as e^{-i p_k t_j} = (-1)^a e^{-2 pi i a j / n} for
    // a = k - n/2, so each output point is a sign times one DFT bin.  The
    // (-1)^a factor carries the half-grid offsets of both sides.
    Grid1D dual = dual_grid(grid);
    std::vector<Complex> out(static_cast<std::size_t>(n));
    const double scale = grid.step / std::sqrt(2.0 * std::numbers::pi);
    for (int k = 0; k < n; ++k) {
        const int a = k - n / 2;
        const int idx = a < 0 ? a + n : a;
        const double sign = (a & 1) ? -1.0 : 1.0;
        out[static_cast<std::size_t>(k)] = scale * sign * spectrum[static_cast<std::size_t>(idx)];
    }
    return {std::move(out), dual};
}

Complex fourier_at(std::span<const Complex> values, const Grid1D& grid, double p) {
    if (static_cast<int>(values.size()) != grid.count)
        throw std::invalid_argument("fourier_at: values size does not match grid");
    Complex acc = 0.0;
    for (int j = 0; j < grid.count; ++j)
        acc += values[static_cast<std::size_t>(j)] * std::polar(1.0, -p * grid.point(j));
    return acc * (grid.step / std::sqrt(2.0 * std::numbers::pi));
}

} // namespace phq
