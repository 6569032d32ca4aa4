#include "phq/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace phq {

double TruncatedWeights::total() const {
    double s = 0.0;
    for (const auto& [n, w] : weights) s += w;
    return s;
}

WeightSequence WeightSequence::delta(int n) {
    if (n < 0) throw std::invalid_argument("WeightSequence::delta: level must be >= 0");
    WeightSequence s;
    s.kind_ = Kind::Explicit;
    s.entries_ = {{n, 1.0}};
    return s;
}

WeightSequence WeightSequence::explicit_list(std::vector<double> w) {
    std::vector<std::pair<int, double>> pairs;
    pairs.reserve(w.size());
    for (std::size_t n = 0; n < w.size(); ++n) pairs.emplace_back(static_cast<int>(n), w[n]);
    return explicit_pairs(std::move(pairs));
}

WeightSequence WeightSequence::explicit_pairs(std::vector<std::pair<int, double>> w) {
    if (w.empty()) throw std::invalid_argument("WeightSequence: empty weight list");
    std::sort(w.begin(), w.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& [n, wn] = w[i];
        if (n < 0) throw std::invalid_argument("WeightSequence: negative level");
        if (i > 0 && n == w[i - 1].first)
            throw std::invalid_argument("WeightSequence: duplicate level");
        if (wn < 0.0) throw std::invalid_argument("WeightSequence: negative weight");
        sum += wn;
    }
    if (sum > 1.0 + 1e-12) throw std::invalid_argument("WeightSequence: weights sum to more than 1");
    WeightSequence s;
    s.kind_ = Kind::Explicit;
    s.entries_ = std::move(w);
    return s;
}

WeightSequence WeightSequence::geometric(double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("WeightSequence::geometric: ratio must be in (0,1)");
    WeightSequence s;
    s.kind_ = Kind::Geometric;
    s.param_ = ratio;
    return s;
}

WeightSequence WeightSequence::power_law(double alpha) {
    if (!(alpha > 1.0))
        throw std::invalid_argument("WeightSequence::power_law: exponent must be > 1");
    WeightSequence s;
    s.kind_ = Kind::PowerLaw;
    s.param_ = alpha;
    s.zeta_alpha_ = zeta_fn(alpha);
    return s;
}

double WeightSequence::ratio() const {
    if (kind_ != Kind::Geometric) throw std::logic_error("WeightSequence::ratio: not geometric");
    return param_;
}

double WeightSequence::exponent() const {
    if (kind_ != Kind::PowerLaw) throw std::logic_error("WeightSequence::exponent: not power law");
    return param_;
}

const std::vector<std::pair<int, double>>& WeightSequence::entries() const {
    if (kind_ != Kind::Explicit) throw std::logic_error("WeightSequence::entries: not explicit");
    return entries_;
}

double WeightSequence::weight(int n) const {
    if (n < 0) return 0.0;
    switch (kind_) {
        case Kind::Explicit: {
            for (const auto& [m, w] : entries_)
                if (m == n) return w;
            return 0.0;
        }
        case Kind::Geometric:
            return (1.0 - param_) * std::pow(param_, n);
        case Kind::PowerLaw:
            return n >= 1 ? std::pow(static_cast<double>(n), -param_) / zeta_alpha_ : 0.0;
    }
    return 0.0;
}

namespace {
std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
} // namespace

std::string WeightSequence::spec_string() const {
    switch (kind_) {
        case Kind::Explicit: {
            if (entries_.size() == 1 && entries_[0].second == 1.0)
                return "delta:" + std::to_string(entries_[0].first);
            std::string out = "explicit:";
            const int top = entries_.back().first;
            for (int n = 0; n <= top; ++n) {
                if (n > 0) out += ',';
                out += format_double(weight(n));
            }
            return out;
        }
        case Kind::Geometric:
            return "geometric:" + format_double(param_);
        case Kind::PowerLaw:
            return "powerlaw:" + format_double(param_);
    }
    return {};
}

TruncatedWeights WeightSequence::truncate(double tail_bound, int max_terms) const {
    if (!(tail_bound > 0.0)) throw std::invalid_argument("truncate: tail_bound must be > 0");
    if (max_terms < 1) throw std::invalid_argument("truncate: max_terms must be >= 1");

    TruncatedWeights out;
    switch (kind_) {
        case Kind::Explicit: {
            out.weights = entries_;
            out.tail_mass = std::max(0.0, 1.0 - out.total());
            out.tail_bound_met = true;
            return out;
        }
        case Kind::Geometric: {
            // Tail beyond level N is exactly r^{N+1}.
            const double r = param_;
            int top = static_cast<int>(std::ceil(std::log(tail_bound) / std::log(r))) - 1;
            top = std::max(top, 0);
            out.tail_bound_met = top < max_terms;
            top = std::min(top, max_terms - 1);
            out.weights.reserve(static_cast<std::size_t>(top) + 1);
            double w = 1.0 - r;
            for (int n = 0; n <= top; ++n, w *= r) out.weights.emplace_back(n, w);
            out.tail_mass = std::pow(r, top + 1);
            return out;
        }
        case Kind::PowerLaw: {
            const double alpha = param_;
            // Tail beyond level N is zeta_tail(alpha, N+1)/zeta(alpha); start
            // from the integral estimate and grow until the bound holds.
            long top = static_cast<long>(
                std::ceil(std::pow((alpha - 1.0) * tail_bound * zeta_alpha_, -1.0 / (alpha - 1.0))));
            top = std::clamp(top, 4L, static_cast<long>(max_terms));
            while (top < max_terms && zeta_tail(alpha, top + 1) / zeta_alpha_ > tail_bound)
                top = std::min<long>(2 * top, max_terms);
            out.weights.reserve(static_cast<std::size_t>(top));
            for (long n = 1; n <= top; ++n)
                out.weights.emplace_back(static_cast<int>(n),
                                         std::pow(static_cast<double>(n), -alpha) / zeta_alpha_);
            out.tail_mass = zeta_tail(alpha, top + 1) / zeta_alpha_;
            out.tail_bound_met = out.tail_mass <= tail_bound;
            return out;
        }
    }
    throw std::logic_error("truncate: unreachable");
}

double zeta_tail(double s, long a) {
    if (!(s > 1.0)) throw std::invalid_argument("zeta_tail: requires s > 1");
    if (a < 1) throw std::invalid_argument("zeta_tail: requires a >= 1");
    // Push the expansion point out until the first omitted Euler-Maclaurin
    // term is negligible relative to the integral term.
    long b = std::max(a, static_cast<long>(8.0 * s) + 8);
    double head = 0.0;
    for (long n = a; n < b; ++n) head += std::pow(static_cast<double>(n), -s);
    const double x = static_cast<double>(b);
    const double f = std::pow(x, -s);
    double tail = x * f / (s - 1.0) + 0.5 * f;
    tail += s * f / x / 12.0;
    tail -= s * (s + 1.0) * (s + 2.0) * f / (x * x * x) / 720.0;
    tail += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * f / (x * x * x * x * x) / 30240.0;
    return head + tail;
}

double zeta_fn(double s) { return zeta_tail(s, 1); }

} // namespace phq
