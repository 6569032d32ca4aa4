// Acceptance gate: runs every verification group and prints one line per
// criterion.  Exit code is the number of failing criteria.
#include "phq/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    const char* label;
    std::vector<phq::verify::CheckRecord> (*group)(const phq::verify::Options&);
};

} // namespace

int main() {
    using namespace phq::verify;
    const Options opt;

    const Criterion criteria[] = {
        {"margin moments match operator expectations", moment_theorem_checks},
        {"first and second moment polynomials", closed_form_checks},
        {"ladder and number-operator identities", quantizer_identity_checks},
        {"level growth of even position moments", growth_law_checks},
        {"mixture coefficients and convergence verdicts", mixture_checks},
        {"density and margin consistency", density_margin_checks},
        {"coefficient parity and positivity", parity_positivity_checks},
        {"commutator truncation hygiene", commutation_checks},
    };

    int failed_criteria = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<CheckRecord> records = c.group(opt);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        int passed = 0;
        double worst = 0.0;
        std::string first_fail;
        for (const CheckRecord& r : records) {
            if (r.pass) {
                ++passed;
            } else if (first_fail.empty()) {
                first_fail = r.check;
            }
            const double margin = r.tolerance > 0.0 ? r.abs_err / r.tolerance : r.abs_err;
            if (margin > worst) worst = margin;
        }
        const bool ok = passed == static_cast<int>(records.size());
        if (!ok) ++failed_criteria;

        std::printf("criterion %d: %-46s %s  [%d/%zu checks, worst err/tol %.2e, %.2f s]\n", index,
                    c.label, ok ? "PASS" : "FAIL", passed, records.size(), worst, seconds);
        if (!ok) std::printf("  first failing check: %s\n", first_fail.c_str());
        std::fflush(stdout);
    }

    return failed_criteria;
}
