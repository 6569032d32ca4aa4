#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phq::verify {

// One numeric check; serialized to JSON in exactly this field order.
struct CheckRecord {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Options {
    std::uint64_t seed = 20240607;  // random test states
    double tol_scale = 1.0;         // scales every tolerance, CLI override
};

// Check groups, one per acceptance area.  Each returns every record it
// evaluated, passing or not.
std::vector<CheckRecord> moment_theorem_checks(const Options& opt);     // operator vs quadrature
std::vector<CheckRecord> closed_form_checks(const Options& opt);        // p1, p2 coefficients
std::vector<CheckRecord> quantizer_identity_checks(const Options& opt); // ladder / number identities
std::vector<CheckRecord> growth_law_checks(const Options& opt);         // degree-k fits of <n|Q^2k|n>
std::vector<CheckRecord> mixture_checks(const Options& opt);            // s-coefficients, verdicts
std::vector<CheckRecord> density_margin_checks(const Options& opt);     // Gaussian + Fubini checks
std::vector<CheckRecord> parity_positivity_checks(const Options& opt);  // coefficient structure
std::vector<CheckRecord> commutation_checks(const Options& opt);        // truncation hygiene

enum class Suite { Identities, Oracle, LemmaQ2k, Mixtures, All };

const char* suite_name(Suite s);
bool parse_suite(std::string_view name, Suite& out);
std::vector<CheckRecord> run_suite(Suite s, const Options& opt);

// Deterministic report: {"suite", "seed", "tol_scale", "checks": [...],
// "passed", "failed"}.
std::string report_json(Suite s, const Options& opt, std::span<const CheckRecord> records);

} // namespace phq::verify
