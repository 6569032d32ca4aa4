#include "phq/quantize.hpp"

#include "phq/moments.hpp"

#include <stdexcept>

namespace phq {

int RealPolynomial::degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != 0.0) return static_cast<int>(i);
    return -1;
}

std::string DomainTag::str() const {
    const auto part = [](const char* sym, int power) -> std::string {
        if (power == 1) return std::string("D(") + sym + ")";
        return std::string("D(") + sym + "^" + std::to_string(power) + ")";
    };
    std::string out;
    if (q_power > 0) out += part("Q", q_power);
    if (p_power > 0) {
        if (!out.empty()) out += " ∩ ";
        out += part("P", p_power);
    }
    return out.empty() ? "H" : out;
}

namespace {

// Substitute the moment polynomials: h = sum_l a_l t^l becomes
// sum_l a_l p_l(.), collected as one polynomial in the operator argument.
std::vector<double> substituted_coeffs(const RealPolynomial& h, int n, const char* who) {
    const int k = h.degree();
    if (k < 1) throw std::invalid_argument(std::string(who) + ": polynomial degree must be >= 1");
    std::vector<double> total(static_cast<std::size_t>(k) + 1, 0.0);
    total[0] = h.coeffs[0];  // p_0 = 1
    for (int l = 1; l <= k; ++l) {
        const double a = h.coeffs[static_cast<std::size_t>(l)];
        if (a == 0.0) continue;
        const MomentPolynomial p = moment_polynomial(n, l);
        for (int j = 0; j <= l; ++j) total[static_cast<std::size_t>(j)] += a * p.coeffs[static_cast<std::size_t>(j)];
    }
    return total;
}

void check_dim(int dim, int k, const char* who) {
    if (dim < 2 || dim <= k)
        throw std::invalid_argument(std::string(who) + ": dim must exceed the polynomial degree");
}

} // namespace

std::pair<FockOperator, DomainTag> quantize_x(const RealPolynomial& h, int n, int dim) {
    if (n < 0) throw std::invalid_argument("quantize_x: level must be >= 0");
    const std::vector<double> total = substituted_coeffs(h, n, "quantize_x");
    const int k = static_cast<int>(total.size()) - 1;
    check_dim(dim, k, "quantize_x");
    auto [q, p] = build_qp(dim);
    return {matrix_polynomial(total, q), DomainTag{k, 0}};
}

std::pair<FockOperator, DomainTag> quantize_complex(const RealPolynomial& h1,
                                                    const RealPolynomial& h2, int n, int dim) {
    if (n < 0) throw std::invalid_argument("quantize_complex: level must be >= 0");
    const std::vector<double> cx = substituted_coeffs(h1, n, "quantize_complex");
    const std::vector<double> cy = substituted_coeffs(h2, n, "quantize_complex");
    const int kx = static_cast<int>(cx.size()) - 1;
    const int ky = static_cast<int>(cy.size()) - 1;
    check_dim(dim, std::max(kx, ky), "quantize_complex");
    auto [q, p] = build_qp(dim);
    const FockOperator op =
        matrix_polynomial(cx, q) + Complex(0.0, 1.0) * matrix_polynomial(cy, p);
    return {op, DomainTag{kx, ky}};
}

std::pair<FockOperator, DomainTag> quantize_sum(const RealPolynomial& h1, const RealPolynomial& h2,
                                                int n, int dim) {
    if (n < 0) throw std::invalid_argument("quantize_sum: level must be >= 0");
    for (const RealPolynomial* h : {&h1, &h2}) {
        const int k = h->degree();
        if (k < 2 || k % 2 != 0 || h->coeffs[static_cast<std::size_t>(k)] <= 0.0)
            throw std::invalid_argument(
                "quantize_sum: each polynomial needs even degree >= 2 and a positive leading "
                "coefficient");
    }
    const std::vector<double> cx = substituted_coeffs(h1, n, "quantize_sum");
    const std::vector<double> cy = substituted_coeffs(h2, n, "quantize_sum");
    const int kx = static_cast<int>(cx.size()) - 1;
    const int ky = static_cast<int>(cy.size()) - 1;
    check_dim(dim, std::max(kx, ky), "quantize_sum");
    auto [q, p] = build_qp(dim);
    const FockOperator op = matrix_polynomial(cx, q) + matrix_polynomial(cy, p);
    return {op, DomainTag{kx, ky}};
}

} // namespace phq
