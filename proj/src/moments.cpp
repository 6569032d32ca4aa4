#include "phq/moments.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace phq {

namespace {

double binom(int k, int l) {
    double b = 1.0;
    for (int i = 1; i <= l; ++i) b = b * (k - l + i) / i;
    return b;
}

double eval_poly(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

// Relative stop rule for mixture series; the analytic tail bound must drop
// below this fraction of the partial sum.
constexpr double kSeriesTailRel = 1e-10;

// sum_n w_n <n|Q^m|n> for a geometric weight sequence.  Terms use the exact
// matrix moment for small n and the interpolated growth polynomial beyond;
// the loop stops once an analytic bound on the remaining mass is negligible.
double geometric_weighted_sum(double r, int m) {
    if (m == 0) return 1.0;
    const std::vector<double> poly = diagonal_moment_polynomial(m);
    const int deg = static_cast<int>(poly.size()) - 1;
    double coeff_mag = 0.0;
    for (double c : poly) coeff_mag += std::abs(c);

    double sum = 0.0;
    double wn = 1.0 - r;
    for (long n = 0;; ++n, wn *= r) {
        const double qn =
            n <= 64 ? q_moment(static_cast<int>(n), m) : eval_poly(poly, static_cast<double>(n));
        sum += wn * qn;
        if (n >= 8L * deg + 8) {
            // q(j) <= coeff_mag j^deg for j >= 1 and the term ratio beyond n is
            // at most rho, so the remaining mass is a dominated geometric series.
            const double rho = r * std::pow(1.0 + 1.0 / static_cast<double>(n), deg);
            if (rho < 1.0) {
                const double tail = wn * r * coeff_mag *
                                    std::pow(static_cast<double>(n) + 1.0, deg) / (1.0 - rho);
                if (tail <= kSeriesTailRel * std::abs(sum)) break;
            }
        }
        if (n > 10'000'000)
            throw std::runtime_error("geometric_weighted_sum: series failed to converge");
    }
    return sum;
}

// sum_n w_n <n|Q^m|n> for the power-law sequence: exact head, then the growth
// polynomial term by term against analytic zeta tails.
double powerlaw_weighted_sum(double alpha, int m) {
    if (m == 0) return 1.0;
    const std::vector<double> poly = diagonal_moment_polynomial(m);
    const int deg = static_cast<int>(poly.size()) - 1;
    if (!(alpha - deg > 1.0))
        throw DivergentMomentError("powerlaw_weighted_sum: series diverges");

    const long head = 2048;
    double sum = 0.0;
    for (long n = 1; n <= head; ++n) {
        const double qn =
            n <= 64 ? q_moment(static_cast<int>(n), m) : eval_poly(poly, static_cast<double>(n));
        sum += std::pow(static_cast<double>(n), -alpha) * qn;
    }
    for (int j = 0; j <= deg; ++j)
        sum += poly[static_cast<std::size_t>(j)] * zeta_tail(alpha - j, head + 1);
    return sum / zeta_fn(alpha);
}

double weighted_q_moment_sum(const WeightSequence& w, int m) {
    switch (w.kind()) {
        case WeightSequence::Kind::Explicit: {
            double sum = 0.0;
            for (const auto& [n, wn] : w.entries()) sum += wn * q_moment(n, m);
            return sum;
        }
        case WeightSequence::Kind::Geometric:
            return geometric_weighted_sum(w.ratio(), m);
        case WeightSequence::Kind::PowerLaw:
            return powerlaw_weighted_sum(w.exponent(), m);
    }
    throw std::logic_error("weighted_q_moment_sum: unreachable");
}

void check_degree(int k, const char* who) {
    if (k < 1 || k > 12)
        throw std::invalid_argument(std::string(who) + ": order must be in [1,12]");
}

FockOperator apply_to_axis(const std::vector<double>& coeffs, Axis axis, int dim, int k,
                           const char* who) {
    if (dim < 2 || dim <= k)
        throw std::invalid_argument(std::string(who) +
                                    ": dim must exceed the polynomial degree");
    auto [q, p] = build_qp(dim);
    return matrix_polynomial(coeffs, axis == Axis::X ? q : p);
}

} // namespace

MomentPolynomial moment_polynomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("moment_polynomial: level must be >= 0");
    check_degree(k, "moment_polynomial");
    MomentPolynomial p;
    p.degree = k;
    p.kernel = "delta:" + std::to_string(n);
    p.coeffs.assign(static_cast<std::size_t>(k) + 1, 0.0);
    for (int l = 0; l <= k; ++l) {
        const int gap = k - l;
        // (t - Q)^k expands with sign (-1)^gap; odd-gap moments vanish, so
        // only the +1 signs survive.
        if (gap % 2 == 0) p.coeffs[static_cast<std::size_t>(l)] = binom(k, l) * q_moment(n, gap);
    }
    return p;
}

FockOperator moment_operator(int n, int k, Axis axis, int dim) {
    const MomentPolynomial p = moment_polynomial(n, k);
    return apply_to_axis(p.coeffs, axis, dim, k, "moment_operator");
}

bool nseries_converges(const WeightSequence& w, int k) {
    if (k < 0) throw std::invalid_argument("nseries_converges: order must be >= 0");
    switch (w.kind()) {
        case WeightSequence::Kind::Explicit:
        case WeightSequence::Kind::Geometric:
            return true;
        case WeightSequence::Kind::PowerLaw:
            return static_cast<double>(k) < w.exponent() - 1.0;
    }
    return false;
}

std::vector<double> s_coefficients(const WeightSequence& w, int k) {
    check_degree(k, "s_coefficients");
    if (!nseries_converges(w, k))
        throw DivergentMomentError("s_coefficients: moment of order " + std::to_string(k) +
                                   " diverges for kernel " + w.spec_string());
    std::vector<double> s(static_cast<std::size_t>(k) + 1, 0.0);
    for (int l = 0; l <= k; ++l) {
        const int gap = k - l;
        if (gap % 2 == 0)
            s[static_cast<std::size_t>(l)] = binom(k, l) * weighted_q_moment_sum(w, gap);
    }
    return s;
}

FockOperator mixture_moment_operator(const WeightSequence& w, int k, Axis axis, int dim) {
    const std::vector<double> s = s_coefficients(w, k);
    return apply_to_axis(s, axis, dim, k, "mixture_moment_operator");
}

FormalMomentOperator formal_mixture_moment_operator(const WeightSequence& w, int k, Axis axis,
                                                    int dim) {
    check_degree(k, "formal_mixture_moment_operator");
    const bool convergent = nseries_converges(w, k);
    if (!convergent && w.kind() == WeightSequence::Kind::PowerLaw) {
        // Every coefficient series must still converge: the largest even gap
        // g satisfies sum_n w_n n^{g/2} < infinity iff g/2 < alpha - 1.
        const int gmax = k % 2 == 0 ? k : k - 1;
        if (!(gmax / 2 < w.exponent() - 1.0))
            throw DivergentMomentError(
                "formal_mixture_moment_operator: coefficient series diverge for kernel " +
                w.spec_string());
    }

    FormalMomentOperator out;
    out.s.assign(static_cast<std::size_t>(k) + 1, 0.0);
    for (int l = 0; l <= k; ++l) {
        const int gap = k - l;
        if (gap % 2 == 0)
            out.s[static_cast<std::size_t>(l)] = binom(k, l) * weighted_q_moment_sum(w, gap);
    }
    out.op = apply_to_axis(out.s, axis, dim, k, "formal_mixture_moment_operator");
    out.domain_note = convergent ? "dense domain" : "square-integrability domain {0}";
    return out;
}

std::vector<double> diagonal_moment_polynomial(int m) {
    if (m < 0) throw std::invalid_argument("diagonal_moment_polynomial: order must be >= 0");
    if (m % 2 == 1) return {0.0};
    const int j = m / 2;

    // Newton divided differences on the exact values at n = 0..j.  The ladder
    // expansion of <n|Q^m|n> is a sum of products of falling factorials in n,
    // hence a degree-j polynomial for all n >= 0, so interpolating j+1 exact
    // values reproduces it everywhere.
    std::vector<double> diff(static_cast<std::size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) diff[static_cast<std::size_t>(i)] = q_moment(i, m);
    for (int level = 1; level <= j; ++level)
        for (int i = j; i >= level; --i)
            diff[static_cast<std::size_t>(i)] =
                (diff[static_cast<std::size_t>(i)] - diff[static_cast<std::size_t>(i) - 1]) / level;

    std::vector<double> coeffs(static_cast<std::size_t>(j) + 1, 0.0);
    std::vector<double> basis{1.0};  // prod_{i<level} (x - i), expanded
    for (int level = 0; level <= j; ++level) {
        for (std::size_t l = 0; l < basis.size(); ++l) coeffs[l] += diff[static_cast<std::size_t>(level)] * basis[l];
        if (level < j) {
            basis.push_back(0.0);
            for (std::size_t l = basis.size() - 1; l > 0; --l)
                basis[l] = basis[l - 1] - level * basis[l];
            basis[0] *= -static_cast<double>(level);
        }
    }

    // Guard the continuation just past the interpolation nodes.
    for (int n = j + 1; n <= j + 3; ++n) {
        const double exact = q_moment(n, m);
        if (std::abs(eval_poly(coeffs, n) - exact) > 1e-8 * std::abs(exact))
            throw std::logic_error("diagonal_moment_polynomial: continuation check failed");
    }
    return coeffs;
}

PolynomialFit q2k_polynomial_check(int k, int n_lo, int n_hi) {
    if (k < 1 || k > 6) throw std::invalid_argument("q2k_polynomial_check: k must be in [1,6]");
    if (n_lo < k || n_hi > k + 32 || n_hi - n_lo < k)
        throw std::invalid_argument(
            "q2k_polynomial_check: range must lie in [k, k+32] and contain at least k+1 levels");

    const int npts = n_hi - n_lo + 1;
    const double mid = 0.5 * (n_lo + n_hi);
    Eigen::VectorXd y(npts);
    Eigen::MatrixXd v(npts, k + 1);
    for (int i = 0; i < npts; ++i) {
        y(i) = q_moment(n_lo + i, 2 * k);
        const double x = n_lo + i - mid;
        double xp = 1.0;
        for (int j = 0; j <= k; ++j, xp *= x) v(i, j) = xp;
    }
    const Eigen::VectorXd b = v.colPivHouseholderQr().solve(y);

    PolynomialFit fit;
    fit.coeffs.assign(static_cast<std::size_t>(k) + 1, 0.0);
    for (int j = 0; j <= k; ++j)
        for (int l = 0; l <= j; ++l)
            fit.coeffs[static_cast<std::size_t>(l)] += b(j) * binom(j, l) * std::pow(-mid, j - l);

    for (int i = 0; i < npts; ++i) {
        double fitted = 0.0;
        const double x = n_lo + i - mid;
        for (int j = k; j >= 0; --j) fitted = fitted * x + b(j);
        fit.max_rel_residual = std::max(fit.max_rel_residual, std::abs(fitted - y(i)) / y(i));
    }
    return fit;
}

} // namespace phq
