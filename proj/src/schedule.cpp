#include "qrace/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qrace/constants.hpp"
#include "qrace/limits.hpp"

namespace qrace {

ProbabilitySchedule::ProbabilitySchedule(std::vector<double> probs)
    : probs_(std::move(probs)) {
    if (probs_.size() < 2) {
        throw std::invalid_argument("schedule needs at least 2 probabilities");
    }
    double prev = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        const double v = probs_[i];
        if (!(v > 0.0) || v > 1.0) {
            throw std::invalid_argument("schedule probability out of (0,1] at index " +
                                        std::to_string(i + 1));
        }
        if (!(v > prev)) {
            throw std::invalid_argument("schedule not strictly increasing at index " +
                                        std::to_string(i + 1));
        }
        prev = v;
    }
}

double grover_success_probability(std::int64_t n_items, std::int64_t t) {
    if (n_items < 2) throw std::invalid_argument("search space must have >= 2 items");
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n_items)));
    const double s = std::sin(2.0 * (static_cast<double>(t) + 0.5) * theta);
    return s * s;
}

std::int64_t grover_strategy_count(double n_items) {
    if (!(n_items > 0)) throw std::invalid_argument("search space size must be positive");
    const double x = std::numbers::pi / 4.0 * std::sqrt(n_items) - 1.5;
    const double nearest = std::nearbyint(x);
    if (std::abs(x - nearest) < 1e-9) {
        // Too close to an integer for the ceiling to be trusted in double.
        const long double xl =
            std::numbers::pi_v<long double> / 4.0L * std::sqrt(static_cast<long double>(n_items)) - 1.5L;
        return static_cast<std::int64_t>(std::ceil(xl));
    }
    return static_cast<std::int64_t>(std::ceil(x));
}

ProbabilitySchedule grover_schedule(std::int64_t n_items) {
    if (n_items < 5) throw std::invalid_argument("search space must have >= 5 items");
    const std::int64_t k = grover_strategy_count(static_cast<double>(n_items));
    if (k < 2) {
        throw std::invalid_argument("search space of " + std::to_string(n_items) +
                                    " items yields fewer than 2 measuring times");
    }
    if (k > limits::max_materialized_k()) {
        throw std::domain_error("K = " + std::to_string(k) +
                                " exceeds the materialization cap; use the analytic paths");
    }
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n_items)));
    std::vector<double> probs(static_cast<std::size_t>(k));
    for (std::int64_t t = 1; t <= k; ++t) {
        const double s = std::sin(2.0 * (static_cast<double>(t) + 0.5) * theta);
        probs[static_cast<std::size_t>(t - 1)] = s * s;
    }
    return ProbabilitySchedule(std::move(probs));
}

ProbabilitySchedule custom_schedule(std::vector<double> values) {
    return ProbabilitySchedule(std::move(values));
}

DensityReport density_report(const ProbabilitySchedule& s) {
    const int k = s.size();
    double worst = s.p(1);
    if (1.0 - s.p(k) > worst) worst = 1.0 - s.p(k);
    for (int i = 1; i < k; ++i) {
        const double gap = s.p(i + 1) - s.p(i);
        if (gap > worst) worst = gap;
    }
    DensityReport r;
    r.ell = static_cast<double>(k) * worst;
    r.ratio = worst;
    return r;
}

ConvexityReport convexity_report(const ProbabilitySchedule& s) {
    ConvexityReport r;
    const int k = s.size();
    if (k < 3) return r;  // vacuously convex
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 2; i <= k - 1; ++i) {
        const double v = 2.0 / s.p(i) - 1.0 / s.p(i - 1) - 1.0 / s.p(i + 1);
        if (v > worst) worst = v;
    }
    r.worst_violation = worst;
    r.is_convex = worst <= 0.0;
    return r;
}

BitcoinParams bitcoin_schedule_params(double difficulty) {
    if (!(difficulty > 0.0)) throw std::invalid_argument("difficulty must be positive");
    BitcoinParams out;
    out.difficulty = difficulty;
    out.expected_hashes = 4294967296.0 * difficulty;  // 2^32 hashes per unit difficulty
    out.strategy_count = grover_strategy_count(out.expected_hashes);
    out.ell = std::numbers::pi / 2.0;
    const double k = static_cast<double>(out.strategy_count);
    out.epsilon_two_player = bounds::well_supported_bound(out.ell, k);
    out.epsilon_multiplayer = bounds::per_player_tie_bound(out.ell, k);
    out.materializable = out.strategy_count <= limits::max_materialized_k();
    return out;
}

}  // namespace qrace
