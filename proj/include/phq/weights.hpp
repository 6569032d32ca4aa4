#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phq {

// Explicit finite list of (level, weight) pairs together with the mass that
// was dropped to obtain it.  tail_bound_met goes false when the term cap cut
// the sequence before the requested tail bound was reached; the reported
// tail_mass stays honest either way.
struct TruncatedWeights {
    std::vector<std::pair<int, double>> weights;  // ascending level
    double tail_mass = 0.0;
    bool tail_bound_met = true;

    int max_level() const { return weights.empty() ? -1 : weights.back().first; }
    double total() const;
};

// Probability weights over number states.  Three families:
//   explicit  finite list w_0, w_1, ... (sum <= 1),
//   geometric w_n = (1-r) r^n for n >= 0, ratio r in (0,1),
//   power law w_n = n^{-alpha} / zeta(alpha) for n >= 1, alpha > 1.
class WeightSequence {
public:
    enum class Kind { Explicit, Geometric, PowerLaw };

    static WeightSequence delta(int n);
    static WeightSequence explicit_list(std::vector<double> w);  // levels 0..w.size()-1
    static WeightSequence explicit_pairs(std::vector<std::pair<int, double>> w);
    static WeightSequence geometric(double ratio);
    static WeightSequence power_law(double alpha);

    Kind kind() const { return kind_; }
    double ratio() const;     // geometric only
    double exponent() const;  // power law only
    const std::vector<std::pair<int, double>>& entries() const;  // explicit only

    bool finite() const { return kind_ == Kind::Explicit; }

    // Weight of level n (0 where the sequence has no mass).
    double weight(int n) const;

    // The textual form the CLI accepts: "delta:3", "explicit:0.5,0.5",
    // "geometric:0.5", "powerlaw:3".
    std::string spec_string() const;

    // Finite truncation with tail mass <= tail_bound, subject to max_terms.
    TruncatedWeights truncate(double tail_bound = 1e-10, int max_terms = 1 << 16) const;

private:
    WeightSequence() = default;
    Kind kind_ = Kind::Explicit;
    std::vector<std::pair<int, double>> entries_;
    double param_ = 0.0;       // ratio or exponent
    double zeta_alpha_ = 0.0;  // power-law normalization
};

// sum_{n >= a} n^{-s} for s > 1, by Euler-Maclaurin.  Used for power-law
// normalization and for analytic series tails.
double zeta_tail(double s, long a);

// Riemann zeta for s > 1: direct head plus zeta_tail.
double zeta_fn(double s);

} // namespace phq
