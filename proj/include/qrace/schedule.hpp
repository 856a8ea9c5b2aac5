#pragma once

#include <cstdint>
#include <vector>

namespace qrace {

// Strictly increasing success probabilities p_1 < ... < p_K, each in (0,1].
// A schedule of length K defines a race in which the pure strategies are the
// measuring times 1..K and measuring at time t succeeds with probability p_t.
class ProbabilitySchedule {
public:
    // Validates K >= 2, range (0,1] and strict monotonicity.
    explicit ProbabilitySchedule(std::vector<double> probs);

    int size() const { return static_cast<int>(probs_.size()); }

    // Times are 1-based throughout, matching the formulas they come from.
    double p(int t) const { return probs_[t - 1]; }
    double pbar(int t) const { return 1.0 - probs_[t - 1]; }

    const std::vector<double>& probs() const { return probs_; }

    bool operator==(const ProbabilitySchedule&) const = default;

private:
    std::vector<double> probs_;
};

// Minimal density parameter of a schedule: the smallest ell such that
// p_1 <= ell/K, p_K >= 1 - ell/K and every consecutive gap is <= ell/K.
struct DensityReport {
    double ell = 0.0;
    double ratio = 0.0;  // ell / K

    bool is_dense_for(double ell_prime) const { return ell_prime >= ell; }
};

// Convexity of the reciprocal sequence (1/p_1, ..., 1/p_K).
struct ConvexityReport {
    bool is_convex = true;
    // max over interior i of 2/p_i - 1/p_{i-1} - 1/p_{i+1}; <= 0 iff convex.
    double worst_violation = 0.0;
};

// Success probability of t steps of amplitude amplification over n_items:
//   sin^2(2(t + 1/2) asin(1/sqrt(n_items)))
// Exposed separately so the formula can be checked outside the K >= 2 domain.
double grover_success_probability(std::int64_t n_items, std::int64_t t);

// Number of useful measuring times for a search space of n_items:
//   ceil(pi/4 sqrt(n_items) - 3/2)
// K is a discrete structural parameter, so when the double-precision value
// lands near an integer the boundary is recomputed in extended precision.
std::int64_t grover_strategy_count(double n_items);

// The search race on n_items: K measuring times with the sine-law schedule.
// Rejects inputs yielding K < 2 and K above the materialization cap.
ProbabilitySchedule grover_schedule(std::int64_t n_items);

// Wraps verbatim values after validating the schedule invariants.
ProbabilitySchedule custom_schedule(std::vector<double> values);

DensityReport density_report(const ProbabilitySchedule& s);

ConvexityReport convexity_report(const ProbabilitySchedule& s);

// Proof-of-work parameterization.  A difficulty d means the network performs
// 2^32 * d hash evaluations on average per block, which sets the search-space
// size and hence K.  The schedule itself is far too large to materialize at
// realistic difficulties, so only the parameters and the analytic bounds
// (at ell = pi/2) are reported.
struct BitcoinParams {
    double difficulty = 0.0;
    double expected_hashes = 0.0;        // 2^32 * difficulty
    std::int64_t strategy_count = 0;     // K
    double ell = 0.0;                    // pi/2
    double epsilon_two_player = 0.0;     // 7(sqrt2-1) ell / K
    double epsilon_multiplayer = 0.0;    // 8e ell / K
    bool materializable = false;         // K within the cap
};

BitcoinParams bitcoin_schedule_params(double difficulty);

}  // namespace qrace
