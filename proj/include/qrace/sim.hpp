#pragma once

#include <cstdint>
#include <vector>

#include "qrace/payoff.hpp"
#include "qrace/strategy.hpp"

namespace qrace {

// Deterministic counter-keyed generator: the stream for (seed, trial, player)
// depends only on those three values, so trials can run in any order or in
// parallel and still reproduce bit-identically.
class KeyedRng {
public:
    KeyedRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t player);

    // Uniform double in [0, 1).
    double next_unit();

private:
    std::uint64_t state_;
};

struct SimConfig {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    RaceConfig race;
    std::vector<MixedStrategy> profile;  // one strategy per player
};

struct SimResult {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> win_counts;      // sole winner per player
    std::vector<std::int64_t> tie_counts;      // [m-2] = trials with an m-way tie
    std::int64_t no_winner_count = 0;          // nobody succeeded
    std::vector<double> payoff_sums;           // per player
    std::vector<double> payoff_sq_sums;

    double win_frequency(int player) const;
    double tie_frequency() const;              // any multiplicity
    double tie_frequency(int multiplicity) const;
    double no_winner_frequency() const;
    double payoff_estimate(int player) const;
    double payoff_standard_error(int player) const;  // sample SE of the mean
    // Wald standard error of a frequency estimate at these many trials.
    double frequency_standard_error(double frequency) const;
};

// One-shot race: every player samples a measuring time from her strategy and
// a success draw at that time's probability; the earliest success wins.
// Ties pay 1/m each under tie-splitting, nothing under stingy.  A player who
// measures and fails is out (no restart).
SimResult run_simulation(const SimConfig& config);

// One sweep row per (search-space size, player count): equilibrium analytics
// next to the simulated tie frequency and the density bound.  Rows whose K
// exceeds the materialization cap carry analytic fields only.
struct SweepRow {
    double n_items = 0.0;
    std::int64_t k = 0;
    int players = 0;
    double ell = 0.0;
    int t_star = 0;
    double analytic_payoff = 0.0;
    double analytic_tie = 0.0;
    double empirical_tie = 0.0;
    double tie_bound = 0.0;  // 8 e n ell / K
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    bool analytic_only = false;
};

std::vector<SweepRow> fork_rate_sweep(const std::vector<double>& n_items_list,
                                      const std::vector<int>& player_counts,
                                      std::int64_t trials, std::uint64_t seed);

}  // namespace qrace
