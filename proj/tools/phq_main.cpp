#include "phq/density.hpp"
#include "phq/fock.hpp"
#include "phq/io.hpp"
#include "phq/json_writer.hpp"
#include "phq/moments.hpp"
#include "phq/oracle.hpp"
#include "phq/quantize.hpp"
#include "phq/verify.hpp"
#include "phq/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using phq::Axis;
using phq::FockVector;
using phq::Grid1D;
using phq::WeightSequence;

// Flag > environment > built-in default.
double grid_halfwidth(double flag_value) {
    if (flag_value > 0.0) return flag_value;
    if (const char* env = std::getenv("PHQ_GRID_HALFWIDTH")) {
        const double v = std::stod(env);
        if (!(v > 0.0)) throw std::invalid_argument("PHQ_GRID_HALFWIDTH must be positive");
        return v;
    }
    return 16.0;
}

int grid_points(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PHQ_GRID_POINTS")) {
        const int v = std::stoi(env);
        if (v < 2) throw std::invalid_argument("PHQ_GRID_POINTS must be at least 2");
        return v;
    }
    return 1024;
}

WeightSequence parse_weights(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("weights spec needs the form kind:params, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);
    if (kind == "delta") return WeightSequence::delta(std::stoi(params));
    if (kind == "geometric") return WeightSequence::geometric(std::stod(params));
    if (kind == "powerlaw") return WeightSequence::power_law(std::stod(params));
    if (kind == "explicit") {
        std::vector<double> w;
        std::stringstream ss(params);
        std::string item;
        while (std::getline(ss, item, ',')) w.push_back(std::stod(item));
        return WeightSequence::explicit_list(std::move(w));
    }
    throw std::invalid_argument("unknown weights kind '" + kind + "'");
}

FockVector parse_state(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("state spec needs the form basis:n or coeffs:file.json");
    const std::string kind = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);
    if (kind == "basis") {
        const int n = std::stoi(params);
        if (n < 0) throw std::invalid_argument("basis level must be >= 0");
        return phq::basis_state(n + 1, n);
    }
    if (kind == "coeffs") {
        std::ifstream in(params);
        if (!in) throw std::invalid_argument("cannot open state file '" + params + "'");
        nlohmann::json j;
        in >> j;
        const auto& arr = j.at("coeffs");
        if (!arr.is_array() || arr.empty())
            throw std::invalid_argument("state file must hold a nonempty coeffs array");
        FockVector v{Eigen::VectorXcd(static_cast<Eigen::Index>(arr.size()))};
        for (std::size_t m = 0; m < arr.size(); ++m)
            v.coeffs(static_cast<Eigen::Index>(m)) =
                phq::Complex(arr[m].at(0).get<double>(), arr[m].at(1).get<double>());
        const double norm2 = v.norm2();
        if (!(norm2 > 0.0)) throw std::invalid_argument("state file holds the zero vector");
        v.coeffs /= std::sqrt(norm2);
        return v;
    }
    throw std::invalid_argument("unknown state kind '" + kind + "'");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text;
}

struct MomentsArgs {
    int n = -1;
    std::string weights;
    int k = 1;
    std::string axis = "x";
    int dim = 32;
    bool formal = false;
    std::string out;
};

int run_moments(const MomentsArgs& a) {
    if (a.n < 0 && a.weights.empty())
        throw std::invalid_argument("moments: give either --n or --weights");
    const WeightSequence w = a.weights.empty() ? WeightSequence::delta(a.n) : parse_weights(a.weights);
    const Axis axis = a.axis == "y" ? Axis::Y : Axis::X;

    std::vector<double> coeffs;
    std::string domain_note;
    phq::FockOperator op;
    if (a.formal) {
        phq::FormalMomentOperator f = phq::formal_mixture_moment_operator(w, a.k, axis, a.dim);
        coeffs = std::move(f.s);
        op = std::move(f.op);
        domain_note = std::move(f.domain_note);
    } else {
        coeffs = phq::s_coefficients(w, a.k);
        op = phq::mixture_moment_operator(w, a.k, axis, a.dim);
    }

    phq::JsonWriter jw;
    jw.begin_object();
    jw.key("kernel").value(std::string_view(w.spec_string()));
    jw.key("k").value(a.k);
    jw.key("axis").value(std::string_view(a.axis));
    jw.key("coeffs").begin_array();
    for (double c : coeffs) jw.value(c);
    jw.end_array();
    jw.key("provenance").value(std::string_view("closed-form"));
    if (!domain_note.empty()) jw.key("domain_note").value(std::string_view(domain_note));
    jw.key("operator");
    phq::write_operator_json(jw, op);
    jw.end_object();
    emit(jw.str(), a.out);
    return 0;
}

struct GridArgs {
    double halfwidth = 0.0;
    int points = 0;
};

struct MarginArgs {
    std::string state;
    int n = 0;
    std::string axis = "x";
    GridArgs grid;
    std::string out;
};

int run_margin(const MarginArgs& a) {
    const FockVector state = parse_state(a.state);
    const Grid1D grid = Grid1D::symmetric(grid_halfwidth(a.grid.halfwidth), grid_points(a.grid.points));
    const phq::MarginalDensity m = a.axis == "y" ? phq::y_margin(state, a.n, grid, grid)
                                                 : phq::x_margin(state, a.n, grid, grid);
    char line[96];
    std::snprintf(line, sizeof line, "total %.17g\n", m.total);
    std::cout << line;
    std::snprintf(line, sizeof line, "leakage %.17g\n", m.leakage);
    std::cout << line;
    std::snprintf(line, sizeof line, "moment1 %.17g\n", phq::quadrature_moment(m, 1));
    std::cout << line;
    std::snprintf(line, sizeof line, "moment2 %.17g\n", phq::quadrature_moment(m, 2));
    std::cout << line;
    if (m.leakage_warning)
        std::cout << "warning: grid leakage " << m.leakage << " exceeds 1e-04, widen the grid\n";

    std::ostringstream csv;
    phq::write_margin_csv(csv, m);
    emit(csv.str(), a.out);
    return 0;
}

struct DensityArgs {
    std::string state;
    int n = -1;
    std::string weights;
    GridArgs grid;
    std::string format = "csv";
    int max_kernel_terms = 512;
    std::string out;
};

int run_density(const DensityArgs& a) {
    if (a.n < 0 && a.weights.empty())
        throw std::invalid_argument("density: give either --n or --weights");
    const FockVector state = parse_state(a.state);
    const WeightSequence w = a.weights.empty() ? WeightSequence::delta(a.n) : parse_weights(a.weights);
    const phq::TruncatedWeights kernel = w.truncate(1e-10, a.max_kernel_terms);
    const Grid1D grid = Grid1D::symmetric(grid_halfwidth(a.grid.halfwidth), grid_points(a.grid.points));
    const phq::GriddedDensity den = phq::density(state, kernel, grid, grid);

    char line[96];
    std::snprintf(line, sizeof line, "total %.17g\n", den.total);
    std::cout << line;
    std::snprintf(line, sizeof line, "kernel_tail %.17g\n", den.kernel_tail);
    std::cout << line;
    std::snprintf(line, sizeof line, "leakage %.17g\n", den.leakage);
    std::cout << line;
    if (!kernel.tail_bound_met)
        std::cout << "warning: kernel truncated at " << kernel.weights.size()
                  << " terms before reaching the tail bound\n";
    if (den.leakage_warning)
        std::cout << "warning: grid leakage " << den.leakage << " exceeds 1e-04, widen the grid\n";

    if (a.format == "bin") {
        if (a.out.empty()) throw std::invalid_argument("density: binary output requires --out");
        std::ofstream out(a.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + a.out + "'");
        phq::write_density_binary(out, den);
    } else {
        std::ostringstream csv;
        phq::write_density_csv(csv, den);
        emit(csv.str(), a.out);
    }
    return 0;
}

struct QuantizeArgs {
    std::string form = "x";
    std::vector<double> h1;
    std::vector<double> h2;
    int n = 0;
    int dim = 32;
    std::string out;
};

int run_quantize(const QuantizeArgs& a) {
    const phq::RealPolynomial p1(a.h1);
    std::pair<phq::FockOperator, phq::DomainTag> result;
    if (a.form == "x") {
        if (!a.h2.empty())
            throw std::invalid_argument("quantize: --h2 only applies to the complex/sum forms");
        result = phq::quantize_x(p1, a.n, a.dim);
    } else {
        if (a.h2.empty()) throw std::invalid_argument("quantize: form '" + a.form + "' needs --h2");
        const phq::RealPolynomial p2(a.h2);
        result = a.form == "complex" ? phq::quantize_complex(p1, p2, a.n, a.dim)
                                     : phq::quantize_sum(p1, p2, a.n, a.dim);
    }

    phq::JsonWriter jw;
    jw.begin_object();
    jw.key("form").value(std::string_view(a.form));
    jw.key("n").value(a.n);
    jw.key("domain_tag").value(std::string_view(result.second.str()));
    jw.key("operator");
    phq::write_operator_json(jw, result.first);
    jw.end_object();
    emit(jw.str(), a.out);
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 20240607;
    double tol_scale = 1.0;
    std::string out = "phq_verify.json";
};

int run_verify(const VerifyArgs& a) {
    phq::verify::Suite suite;
    if (!phq::verify::parse_suite(a.suite, suite))
        throw std::invalid_argument("unknown suite '" + a.suite + "'");
    phq::verify::Options opt;
    opt.seed = a.seed;
    opt.tol_scale = a.tol_scale;

    const std::vector<phq::verify::CheckRecord> records = phq::verify::run_suite(suite, opt);
    int failed = 0;
    for (const auto& r : records) {
        if (r.pass) continue;
        ++failed;
        char line[256];
        std::snprintf(line, sizeof line, "FAIL %s: lhs=%.17g rhs=%.17g abs=%.3g rel=%.3g tol=%.3g\n",
                      r.check.c_str(), r.lhs, r.rhs, r.abs_err, r.rel_err, r.tolerance);
        std::cout << line;
    }
    std::cout << "suite " << a.suite << ": " << (records.size() - static_cast<std::size_t>(failed))
              << " passed, " << failed << " failed\n";

    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + a.out + "'");
    out << phq::verify::report_json(suite, opt, records);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moment operators and phase-space densities of truncated number-basis observables"};
    app.require_subcommand(1);

    MomentsArgs ma;
    CLI::App* moments = app.add_subcommand("moments", "moment polynomial and operator tables");
    moments->add_option("--n", ma.n, "number-state kernel level");
    moments->add_option("--weights", ma.weights, "kernel spec: delta:n | explicit:w0,w1,... | geometric:r | powerlaw:alpha");
    moments->add_option("--k", ma.k, "moment order")->required();
    moments->add_option("--axis", ma.axis, "x or y")->check(CLI::IsMember({"x", "y"}));
    moments->add_option("--dim", ma.dim, "truncation dimension");
    moments->add_flag("--formal", ma.formal, "assemble the operator even when the moment diverges");
    moments->add_option("--out", ma.out, "output JSON path (default stdout)");

    MarginArgs ga;
    CLI::App* margin = app.add_subcommand("margin", "1D margin of the phase-space density");
    margin->add_option("--state", ga.state, "basis:n or coeffs:file.json")->required();
    margin->add_option("--n", ga.n, "window level")->required();
    margin->add_option("--axis", ga.axis, "x or y")->check(CLI::IsMember({"x", "y"}));
    margin->add_option("--halfwidth", ga.grid.halfwidth, "grid halfwidth");
    margin->add_option("--points", ga.grid.points, "grid point count");
    margin->add_option("--out", ga.out, "output CSV path (default stdout)");

    DensityArgs da;
    CLI::App* dens = app.add_subcommand("density", "2D phase-space density");
    dens->add_option("--state", da.state, "basis:n or coeffs:file.json")->required();
    dens->add_option("--n", da.n, "single-level kernel");
    dens->add_option("--weights", da.weights, "kernel spec");
    dens->add_option("--halfwidth", da.grid.halfwidth, "grid halfwidth");
    dens->add_option("--points", da.grid.points, "grid point count (power of two)");
    dens->add_option("--format", da.format, "csv or bin")->check(CLI::IsMember({"csv", "bin"}));
    dens->add_option("--max-kernel-terms", da.max_kernel_terms, "kernel truncation cap");
    dens->add_option("--out", da.out, "output path");

    QuantizeArgs qa;
    CLI::App* quant = app.add_subcommand("quantize", "operator integral of a polynomial observable");
    quant->add_option("--form", qa.form, "x | complex | sum")->check(CLI::IsMember({"x", "complex", "sum"}));
    quant->add_option("--h1", qa.h1, "ascending coefficients of the (first) polynomial")->required();
    quant->add_option("--h2", qa.h2, "ascending coefficients of the second polynomial");
    quant->add_option("--n", qa.n, "number-state kernel level");
    quant->add_option("--dim", qa.dim, "truncation dimension");
    quant->add_option("--out", qa.out, "output JSON path (default stdout)");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", va.suite, "identities | oracle | lemma-q2k | mixtures | all");
    verify->add_option("--seed", va.seed, "seed for random test states");
    verify->add_option("--tol-scale", va.tol_scale, "scale all tolerances");
    verify->add_option("--out", va.out, "report JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*moments) return run_moments(ma);
        if (*margin) return run_margin(ga);
        if (*dens) return run_density(da);
        if (*quant) return run_quantize(qa);
        if (*verify) return run_verify(va);
    } catch (const phq::DivergentMomentError& e) {
        std::cerr << "error: " << e.what()
                  << "\nthe k-th moment operator exists nontrivially only when sum_n n^k w_n "
                     "converges; for powerlaw:alpha that needs k < alpha - 1 (--formal assembles "
                     "the flagged operator anyway)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
