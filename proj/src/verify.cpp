#include "phq/verify.hpp"

#include "phq/density.hpp"
#include "phq/fock.hpp"
#include "phq/json_writer.hpp"
#include "phq/moments.hpp"
#include "phq/oracle.hpp"
#include "phq/quantize.hpp"
#include "phq/weights.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

namespace phq::verify {

namespace {

std::string fmt(const char* pattern, auto... args) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

CheckRecord rel_check(std::string name, double lhs, double rhs, double tol) {
    CheckRecord r;
    r.check = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / (1.0 + std::abs(rhs));
    r.tolerance = tol;
    r.pass = r.rel_err <= tol;
    return r;
}

CheckRecord abs_check(std::string name, double lhs, double rhs, double tol) {
    CheckRecord r;
    r.check = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / (1.0 + std::abs(rhs));
    r.tolerance = tol;
    r.pass = r.abs_err <= tol;
    return r;
}

CheckRecord bool_check(std::string name, bool got, bool expect) {
    CheckRecord r;
    r.check = std::move(name);
    r.lhs = got ? 1.0 : 0.0;
    r.rhs = expect ? 1.0 : 0.0;
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = r.abs_err;
    r.tolerance = 0.0;
    r.pass = got == expect;
    return r;
}

CheckRecord positive_check(std::string name, double value) {
    CheckRecord r;
    r.check = std::move(name);
    r.lhs = value;
    r.rhs = 0.0;
    r.abs_err = 0.0;
    r.rel_err = 0.0;
    r.tolerance = 0.0;
    r.pass = value > 0.0;
    return r;
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// <n|P^m|n> by repeated matvec, the momentum twin of q_moment.
double p_moment(int n, int m) {
    if (m == 0) return 1.0;
    const int d = std::max(n + m + 1, 2);
    auto [q, p] = build_qp(d);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(n) = 1.0;
    for (int i = 0; i < m; ++i) v = p.mat * v;
    return v(n).real();
}

std::vector<FockVector> seeded_states(int count, int span_dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FockVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_state(span_dim, rng));
    return out;
}

} // namespace

std::vector<CheckRecord> moment_theorem_checks(const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckRecord> out;
    const std::vector<FockVector> states = seeded_states(20, 16, opt.seed);
    const int levels[] = {0, 1, 2, 3, 5, 8};
    const int dim_op = 24;  // trusted rows cover the 16-level states for k <= 6
    const double tol = 1e-7 * opt.tol_scale;

    for (Axis axis : {Axis::X, Axis::Y}) {
        for (int n : levels) {
            for (std::size_t si = 0; si < states.size(); ++si) {
                const FockVector& f = states[si];
                const MarginalDensity margin =
                    axis == Axis::X ? x_margin(f, n) : y_margin(f, n);
                for (int k = 1; k <= 6; ++k) {
                    const double lhs = quadrature_moment(margin, k);
                    const double rhs =
                        expectation(f, moment_operator(n, k, axis, dim_op)).real();
                    out.push_back(rel_check(
                        fmt("moment-theorem %s n=%d k=%d state=%zu", axis_name(axis), n, k, si),
                        lhs, rhs, tol));
                }
            }
        }
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckRecord rt;
    rt.check = "moment-theorem wall-time-seconds";
    rt.lhs = seconds;
    rt.rhs = 0.0;
    rt.abs_err = seconds;
    rt.rel_err = 0.0;
    rt.tolerance = 60.0;
    rt.pass = seconds < 60.0;
    out.push_back(std::move(rt));
    return out;
}

std::vector<CheckRecord> closed_form_checks(const Options& opt) {
    std::vector<CheckRecord> out;
    const double tol = 1e-12 * opt.tol_scale;
    for (int n = 0; n <= 50; ++n) {
        const MomentPolynomial p1 = moment_polynomial(n, 1);
        double err1 = std::abs(p1.coeffs[0] - 0.0);
        err1 = std::max(err1, std::abs(p1.coeffs[1] - 1.0));
        out.push_back(abs_check(fmt("closed-form p1 n=%d", n), err1, 0.0, tol));

        const MomentPolynomial p2 = moment_polynomial(n, 2);
        double err2 = std::abs(p2.coeffs[0] - (n + 0.5));
        err2 = std::max(err2, std::abs(p2.coeffs[1] - 0.0));
        err2 = std::max(err2, std::abs(p2.coeffs[2] - 1.0));
        out.push_back(abs_check(fmt("closed-form p2 n=%d", n), err2, 0.0, tol));
    }
    return out;
}

std::vector<CheckRecord> quantizer_identity_checks(const Options& opt) {
    std::vector<CheckRecord> out;
    const int dim = 32;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    auto [raising, lowering] = build_ladder(dim);

    for (int n = 0; n <= 8; ++n) {
        // 1/2 (x^2 + y^2) lands on the shifted number operator.
        const auto [op, tag] = quantize_sum({0.0, 0.0, 0.5}, {0.0, 0.0, 0.5}, n, dim);
        Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(dim, dim);
        for (int j = 0; j < dim; ++j) want(j, j) = j + n + 1.0;
        const int b = op.exact_rows;
        const double err =
            max_abs(op.mat.topLeftCorner(b, b) - want.topLeftCorner(b, b));
        out.push_back(
            abs_check(fmt("quantize-sum number-shift n=%d", n), err, 0.0, 1e-10 * opt.tol_scale));
        out.push_back(bool_check(fmt("quantize-sum domain-tag n=%d", n),
                                 tag.str() == "D(Q^2) ∩ D(P^2)", true));
    }

    for (int n : {0, 3, 8}) {
        const auto [minus, tag_m] =
            quantize_complex({0.0, inv_sqrt2}, {0.0, inv_sqrt2}, n, dim);
        const int bm = minus.exact_rows;
        out.push_back(abs_check(
            fmt("quantize-complex lowering n=%d", n),
            max_abs(minus.mat.topLeftCorner(bm, bm) - lowering.mat.topLeftCorner(bm, bm)), 0.0,
            1e-12 * opt.tol_scale));

        const auto [plus, tag_p] =
            quantize_complex({0.0, inv_sqrt2}, {0.0, -inv_sqrt2}, n, dim);
        const int bp = plus.exact_rows;
        out.push_back(abs_check(
            fmt("quantize-complex raising n=%d", n),
            max_abs(plus.mat.topLeftCorner(bp, bp) - raising.mat.topLeftCorner(bp, bp)), 0.0,
            1e-12 * opt.tol_scale));
    }

    // Hermiticity and linearity of the position-only form.
    for (int n : {0, 4}) {
        const auto [op3, tag3] = quantize_x({0.0, -1.0, 0.0, 2.0}, n, dim);
        out.push_back(abs_check(fmt("quantize-x hermitian n=%d", n),
                                max_abs(op3.mat - op3.mat.adjoint()), 0.0,
                                1e-12 * opt.tol_scale));
        const auto [oph, tagh] = quantize_x({0.0, 0.0, 1.0}, n, dim);
        const auto [opg, tagg] = quantize_x({1.0, 1.0}, n, dim);
        const auto [opsum, tags] = quantize_x({3.0, 3.0, 2.0}, n, dim);
        const Eigen::MatrixXcd lin = 2.0 * oph.mat + 3.0 * opg.mat - opsum.mat;
        out.push_back(abs_check(fmt("quantize-x linearity n=%d", n), max_abs(lin), 0.0,
                                1e-12 * opt.tol_scale));
    }
    return out;
}

std::vector<CheckRecord> growth_law_checks(const Options& opt) {
    std::vector<CheckRecord> out;
    for (int k = 1; k <= 5; ++k) {
        const PolynomialFit fit = q2k_polynomial_check(k, k, k + 10);
        out.push_back(abs_check(fmt("growth-law residual k=%d", k), fit.max_rel_residual, 0.0,
                                1e-8 * opt.tol_scale));
        if (k == 1) {
            out.push_back(abs_check("growth-law k=1 constant", fit.coeffs[0], 0.5,
                                    1e-12 * opt.tol_scale));
            out.push_back(abs_check("growth-law k=1 leading", fit.coeffs[1], 1.0,
                                    1e-12 * opt.tol_scale));
        }
    }
    return out;
}

std::vector<CheckRecord> mixture_checks(const Options& opt) {
    std::vector<CheckRecord> out;
    const double tol = 1e-12 * opt.tol_scale;

    // Equal two-level mixture of orders 0 and 1: s = (1, 0, 1).
    const WeightSequence half = WeightSequence::explicit_list({0.5, 0.5});
    const int dim = 16;
    const FockOperator mixed = mixture_moment_operator(half, 2, Axis::X, dim);
    auto [q, p] = build_qp(dim);
    const Eigen::MatrixXcd want = (q.mat * q.mat + Eigen::MatrixXcd::Identity(dim, dim));
    out.push_back(abs_check("mixture half-half k=2 operator", max_abs(mixed.mat - want), 0.0, tol));

    const std::vector<double> s2 = s_coefficients(half, 2);
    double serr = std::abs(s2[0] - 1.0);
    serr = std::max(serr, std::abs(s2[1]));
    serr = std::max(serr, std::abs(s2[2] - 1.0));
    out.push_back(abs_check("mixture half-half k=2 coeffs", serr, 0.0, tol));

    // Convergence verdicts at the power-law boundary.
    for (int k = 1; k <= 5; ++k) {
        out.push_back(bool_check(fmt("nseries powerlaw alpha=%d k=%d", k + 1, k),
                                 nseries_converges(WeightSequence::power_law(k + 1.0), k), false));
        out.push_back(bool_check(fmt("nseries powerlaw alpha=%d k=%d", k + 2, k),
                                 nseries_converges(WeightSequence::power_law(k + 2.0), k), true));
    }

    // A unit weight at one level must reduce to the single-state polynomial.
    for (int n : {0, 2, 7}) {
        for (int k = 1; k <= 6; ++k) {
            const std::vector<double> s = s_coefficients(WeightSequence::delta(n), k);
            const MomentPolynomial mp = moment_polynomial(n, k);
            double err = 0.0;
            for (std::size_t l = 0; l < s.size(); ++l) err = std::max(err, std::abs(s[l] - mp.coeffs[l]));
            out.push_back(abs_check(fmt("mixture single-weight n=%d k=%d", n, k), err, 0.0, tol));
        }
    }

    // Geometric kernel second moment: E[n] + 1/2 with E[n] = r/(1-r).
    const std::vector<double> sg = s_coefficients(WeightSequence::geometric(0.5), 2);
    out.push_back(abs_check("mixture geometric r=0.5 k=2 s0", sg[0], 1.5, 1e-9 * opt.tol_scale));
    out.push_back(abs_check("mixture geometric r=0.5 k=2 s2", sg[2], 1.0, tol));

    // Divergent request must refuse loudly.
    bool threw = false;
    try {
        s_coefficients(WeightSequence::power_law(3.0), 2);
    } catch (const DivergentMomentError&) {
        threw = true;
    }
    out.push_back(bool_check("mixture powerlaw alpha=3 k=2 refuses", threw, true));

    // The formal route still assembles the polynomial and flags the domain.
    const FormalMomentOperator formal =
        formal_mixture_moment_operator(WeightSequence::power_law(3.0), 2, Axis::X, dim);
    out.push_back(bool_check("mixture formal domain note",
                             formal.domain_note == "square-integrability domain {0}", true));
    out.push_back(positive_check("mixture formal s0 positive", formal.s[0]));
    return out;
}

std::vector<CheckRecord> density_margin_checks(const Options& opt) {
    std::vector<CheckRecord> out;

    // Vacuum state, vacuum window: the x and y margins are the standard
    // normal density and the 2D density is the bivariate standard normal.
    const FockVector vac = basis_state(1, 0);
    const double inv_sqrt2pi = 0.3989422804014327;
    for (Axis axis : {Axis::X, Axis::Y}) {
        const MarginalDensity m = axis == Axis::X ? x_margin(vac, 0) : y_margin(vac, 0);
        double sup = 0.0;
        for (int j = 0; j < m.grid.count; ++j) {
            const double x = m.grid.point(j);
            sup = std::max(sup, std::abs(m.values[static_cast<std::size_t>(j)] -
                                         inv_sqrt2pi * std::exp(-0.5 * x * x)));
        }
        out.push_back(abs_check(fmt("gaussian margin sup %s", axis_name(axis)), sup, 0.0,
                                1e-8 * opt.tol_scale));
    }

    {
        const Grid1D small = Grid1D::symmetric(8.0, 128);
        const GriddedDensity den = density(vac, WeightSequence::delta(0).truncate(), small, small);
        double sup = 0.0;
        for (int i = 0; i < small.count; ++i)
            for (int j = 0; j < small.count; ++j) {
                const double qv = small.point(i), pv = small.point(j);
                const double want =
                    inv_sqrt2pi * inv_sqrt2pi * std::exp(-0.5 * (qv * qv + pv * pv));
                sup = std::max(sup, std::abs(den.value(i, j) - want));
            }
        out.push_back(abs_check("gaussian density sup", sup, 0.0, 1e-8 * opt.tol_scale));

        const Complex w0 = weyl_coefficient(vac, 0, 0.8, -1.3);
        const Complex want0 = inv_sqrt2pi * std::exp(-(0.8 * 0.8 + 1.3 * 1.3) / 4.0);
        out.push_back(abs_check("gaussian overlap closed form", std::abs(w0 - want0), 0.0,
                                1e-10 * opt.tol_scale));
    }

    // Fubini consistency: 2D-density moments against margin quadratures, and
    // the mass accounting, across a small state/kernel matrix.
    std::mt19937_64 rng(opt.seed);
    FockVector plus01{Eigen::VectorXcd::Zero(2)};
    plus01.coeffs(0) = plus01.coeffs(1) = 1.0 / std::numbers::sqrt2;
    const std::vector<std::pair<std::string, FockVector>> states = {
        {"basis0", basis_state(1, 0)},
        {"basis1", basis_state(2, 1)},
        {"plus01", plus01},
        {"rand8", random_state(8, rng)},
    };
    const std::vector<WeightSequence> kernels = {
        WeightSequence::delta(0),
        WeightSequence::delta(2),
        WeightSequence::explicit_list({0.5, 0.5}),
        WeightSequence::geometric(0.5),
    };
    const Grid1D dgrid = Grid1D::symmetric(16.0, 512);

    for (const auto& [sname, state] : states) {
        for (const WeightSequence& w : kernels) {
            const TruncatedWeights kernel = w.truncate();
            const GriddedDensity den = density(state, kernel, dgrid, dgrid);

            out.push_back(abs_check(
                fmt("density mass %s kernel=%s", sname.c_str(), w.spec_string().c_str()),
                den.total + den.kernel_tail, 1.0, 1e-6 * opt.tol_scale));

            for (Axis axis : {Axis::X, Axis::Y}) {
                for (int k = 0; k <= 2; ++k) {
                    const double lhs = density_moment_2d(den, k, axis);
                    double rhs = 0.0;
                    for (const auto& [n, wn] : kernel.weights)
                        rhs += wn * quadrature_moment(state, n, k, axis);
                    out.push_back(abs_check(fmt("density-vs-margin %s kernel=%s %s k=%d",
                                                sname.c_str(), w.spec_string().c_str(),
                                                axis_name(axis), k),
                                            lhs, rhs, 1e-5 * opt.tol_scale));
                }
            }
        }
        for (Axis axis : {Axis::X, Axis::Y}) {
            const MarginalDensity m =
                axis == Axis::X ? x_margin(state, 1) : y_margin(state, 1);
            out.push_back(abs_check(fmt("margin mass %s %s", sname.c_str(), axis_name(axis)),
                                    m.total, 1.0, 1e-8 * opt.tol_scale));
        }
    }
    return out;
}

std::vector<CheckRecord> parity_positivity_checks(const Options& opt) {
    std::vector<CheckRecord> out;
    for (int n = 0; n <= 16; ++n) {
        for (int k = 1; k <= 8; ++k) {
            const MomentPolynomial p = moment_polynomial(n, k);
            double odd_max = 0.0;
            double even_min = p.coeffs[static_cast<std::size_t>(k)];
            for (int l = 0; l <= k; ++l) {
                const double c = p.coeffs[static_cast<std::size_t>(l)];
                if ((k - l) % 2 == 1)
                    odd_max = std::max(odd_max, std::abs(c));
                else
                    even_min = std::min(even_min, c);
            }
            out.push_back(abs_check(fmt("parity odd-gap zero n=%d k=%d", n, k), odd_max, 0.0,
                                    0.0));
            out.push_back(positive_check(fmt("parity even-gap positive n=%d k=%d", n, k),
                                         even_min));
            if (k >= 2) {
                // The gap-2 coefficient witnesses that the operator is not a
                // plain power; for even k it is joined by the constant term.
                out.push_back(positive_check(fmt("non-weyl witness n=%d k=%d", n, k),
                                             p.coeffs[static_cast<std::size_t>(k) - 2]));
                if (k % 2 == 0)
                    out.push_back(
                        positive_check(fmt("constant-term witness n=%d k=%d", n, k), p.coeffs[0]));
            }
        }
    }
    (void)opt;
    return out;
}

std::vector<CheckRecord> commutation_checks(const Options& opt) {
    std::vector<CheckRecord> out;
    const double tol = 1e-12 * opt.tol_scale;

    for (int dim : {4, 16, 33, 64}) {
        auto [q, p] = build_qp(dim);
        const Eigen::MatrixXcd comm = q.mat * p.mat - p.mat * q.mat;
        Eigen::MatrixXcd law = Eigen::MatrixXcd::Identity(dim, dim) * Complex(0.0, 1.0);
        law(dim - 1, dim - 1) = Complex(0.0, 1.0 - dim);
        out.push_back(
            abs_check(fmt("commutator truncation law dim=%d", dim), max_abs(comm - law), 0.0, tol));
        out.push_back(abs_check(
            fmt("commutator trusted block dim=%d", dim),
            max_abs(comm.topLeftCorner(dim - 1, dim - 1) -
                    Eigen::MatrixXcd::Identity(dim - 1, dim - 1) * Complex(0.0, 1.0)),
            0.0, tol));
    }

    for (int n = 0; n <= 16; ++n) {
        double err = 0.0;
        for (int m = 0; m <= 12; ++m) err = std::max(err, std::abs(q_moment(n, m) - p_moment(n, m)));
        out.push_back(abs_check(fmt("q-p moment symmetry n=%d", n), err, 0.0, tol));
    }
    return out;
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::Identities: return "identities";
        case Suite::Oracle: return "oracle";
        case Suite::LemmaQ2k: return "lemma-q2k";
        case Suite::Mixtures: return "mixtures";
        case Suite::All: return "all";
    }
    return "?";
}

bool parse_suite(std::string_view name, Suite& out) {
    for (Suite s : {Suite::Identities, Suite::Oracle, Suite::LemmaQ2k, Suite::Mixtures, Suite::All})
        if (name == suite_name(s)) {
            out = s;
            return true;
        }
    return false;
}

std::vector<CheckRecord> run_suite(Suite s, const Options& opt) {
    std::vector<CheckRecord> out;
    const auto add = [&out](std::vector<CheckRecord> recs) {
        out.insert(out.end(), std::make_move_iterator(recs.begin()),
                   std::make_move_iterator(recs.end()));
    };
    switch (s) {
        case Suite::Identities:
            add(closed_form_checks(opt));
            add(quantizer_identity_checks(opt));
            add(parity_positivity_checks(opt));
            add(commutation_checks(opt));
            break;
        case Suite::Oracle:
            add(moment_theorem_checks(opt));
            add(density_margin_checks(opt));
            break;
        case Suite::LemmaQ2k:
            add(growth_law_checks(opt));
            break;
        case Suite::Mixtures:
            add(mixture_checks(opt));
            break;
        case Suite::All:
            add(moment_theorem_checks(opt));
            add(closed_form_checks(opt));
            add(quantizer_identity_checks(opt));
            add(growth_law_checks(opt));
            add(mixture_checks(opt));
            add(density_margin_checks(opt));
            add(parity_positivity_checks(opt));
            add(commutation_checks(opt));
            break;
    }
    return out;
}

std::string report_json(Suite s, const Options& opt, std::span<const CheckRecord> records) {
    JsonWriter w;
    w.begin_object();
    w.key("suite").value(std::string_view(suite_name(s)));
    w.key("seed").value(opt.seed);
    w.key("tol_scale").value(opt.tol_scale);
    w.key("checks").begin_array();
    int passed = 0;
    for (const CheckRecord& r : records) {
        w.begin_object();
        w.key("check").value(std::string_view(r.check));
        w.key("lhs").value(r.lhs);
        w.key("rhs").value(r.rhs);
        w.key("abs_err").value(r.abs_err);
        w.key("rel_err").value(r.rel_err);
        w.key("tolerance").value(r.tolerance);
        w.key("pass").value(r.pass);
        w.end_object();
        if (r.pass) ++passed;
    }
    w.end_array();
    w.key("passed").value(passed);
    w.key("failed").value(static_cast<int>(records.size()) - passed);
    w.end_object();
    return w.str();
}

} // namespace phq::verify
