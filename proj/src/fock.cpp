#include "phq/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phq {

bool FockVector::normalized(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

FockOperator fock_identity(int dim) {
    if (dim < 1) throw std::invalid_argument("fock_identity: dim must be >= 1");
    return {Eigen::MatrixXcd::Identity(dim, dim), dim};
}

std::pair<FockOperator, FockOperator> build_ladder(int dim) {
    if (dim < 2) throw std::invalid_argument("build_ladder: dim must be >= 2");
    FockOperator raising{Eigen::MatrixXcd::Zero(dim, dim), dim - 1};
    FockOperator lowering{Eigen::MatrixXcd::Zero(dim, dim), dim};
    for (int n = 0; n + 1 < dim; ++n) {
        const double amp = std::sqrt(static_cast<double>(n + 1));
        raising.mat(n + 1, n) = amp;
        lowering.mat(n, n + 1) = amp;
    }
    return {std::move(raising), std::move(lowering)};
}

std::pair<FockOperator, FockOperator> build_qp(int dim) {
    auto [raising, lowering] = build_ladder(dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    FockOperator q{(raising.mat + lowering.mat) * inv_sqrt2, dim - 1};
    FockOperator p{Complex(0.0, 1.0) * (raising.mat - lowering.mat) * inv_sqrt2, dim - 1};
    return {std::move(q), std::move(p)};
}

FockOperator build_number(int dim) {
    if (dim < 1) throw std::invalid_argument("build_number: dim must be >= 1");
    FockOperator n{Eigen::MatrixXcd::Zero(dim, dim), dim};
    for (int j = 0; j < dim; ++j) n.mat(j, j) = static_cast<double>(j);
    return n;
}

int raise_bandwidth(const FockOperator& a) {
    int band = 0;
    const int d = a.dim();
    for (int col = 0; col < d; ++col)
        for (int row = col + band + 1; row < d; ++row)
            if (a.mat(row, col) != Complex(0.0)) band = row - col;
    return band;
}

namespace {
void require_same_dim(const FockOperator& a, const FockOperator& b, const char* who) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}
} // namespace

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    require_same_dim(a, b, "FockOperator product");
    const int exact = std::max(0, std::min(b.exact_rows, a.exact_rows - raise_bandwidth(b)));
    return {a.mat * b.mat, exact};
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    require_same_dim(a, b, "FockOperator sum");
    return {a.mat + b.mat, std::min(a.exact_rows, b.exact_rows)};
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    require_same_dim(a, b, "FockOperator difference");
    return {a.mat - b.mat, std::min(a.exact_rows, b.exact_rows)};
}

FockOperator operator*(Complex c, const FockOperator& a) { return {c * a.mat, a.exact_rows}; }
FockOperator operator*(double c, const FockOperator& a) { return {c * a.mat, a.exact_rows}; }

FockOperator matrix_polynomial(std::span<const double> coeffs, const FockOperator& a) {
    if (coeffs.empty())
        throw std::invalid_argument("matrix_polynomial: coefficient list is empty");
    const int d = a.dim();
    FockOperator r = fock_identity(d);
    r.mat *= coeffs.back();
    for (int l = static_cast<int>(coeffs.size()) - 2; l >= 0; --l) {
        r = r * a;
        r.mat.diagonal().array() += coeffs[static_cast<std::size_t>(l)];
    }
    return r;
}

double q_moment(int n, int m) {
    if (n < 0) throw std::invalid_argument("q_moment: n must be >= 0");
    if (m < 0) throw std::invalid_argument("q_moment: m must be >= 0");
    if (m == 0) return 1.0;
    const int d = std::max(n + m + 1, 2);
    auto [q, p] = build_qp(d);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(n) = 1.0;
    for (int i = 0; i < m; ++i) v = q.mat * v;
    return v(n).real();
}

FockVector basis_state(int dim, int n) {
    if (dim < 1) throw std::invalid_argument("basis_state: dim must be >= 1");
    if (n < 0 || n >= dim) throw std::invalid_argument("basis_state: level out of range");
    FockVector v{Eigen::VectorXcd::Zero(dim)};
    v.coeffs(n) = 1.0;
    return v;
}

FockVector embed(const FockVector& v, int dim) {
    if (dim < v.dim()) throw std::invalid_argument("embed: target dimension too small");
    FockVector out{Eigen::VectorXcd::Zero(dim)};
    out.coeffs.head(v.dim()) = v.coeffs;
    return out;
}

Complex expectation(const FockVector& v, const FockOperator& a) {
    if (a.dim() < v.dim())
        throw std::invalid_argument("expectation: operator smaller than state");
    const FockVector w = a.dim() == v.dim() ? v : embed(v, a.dim());
    return w.coeffs.dot(a.mat * w.coeffs);
}

FockVector random_state(int span_dim, std::mt19937_64& rng) {
    if (span_dim < 1) throw std::invalid_argument("random_state: span_dim must be >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    FockVector v{Eigen::VectorXcd(span_dim)};
    for (int j = 0; j < span_dim; ++j) v.coeffs(j) = Complex(gauss(rng), gauss(rng));
    v.coeffs /= std::sqrt(v.norm2());
    return v;
}

} // namespace phq
