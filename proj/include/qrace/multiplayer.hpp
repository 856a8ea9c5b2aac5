#pragma once

#include <vector>

#include "qrace/payoff.hpp"
#include "qrace/schedule.hpp"
#include "qrace/solve2.hpp"
#include "qrace/strategy.hpp"

namespace qrace {

// The n-player race over P reduces to a 2-player race against probabilities
// p_j = P_j^(1/(n-1)); for n = 2 this is the identity.
ProbabilitySchedule reduced_game(const ProbabilitySchedule& s, int n);

struct MultiInternals {
    ProbabilitySchedule reduced;
    std::vector<double> q, r, z;  // indexed by time, [0] unused, NaN where undefined
    int t_star = 0;
};

struct MultiSolution {
    int n = 0;
    MultiInternals internals;
    MixedStrategy strategy;         // common to all n players
    double per_player_payoff = 0.0; // (1/z_{T*})^(n-1)
};

// Coinciding equilibrium of the n-player stingy race: all players share the
// strategy from the reduced game's closed form, supported on {T*,...,K}.
MultiSolution multi_coinciding_equilibrium(const ProbabilitySchedule& s, int n);

// P_{T*-1} < 1/n always (for T* >= 2); P_{T*-1} >= 1/(2en) under 4enl <= K;
// per-player payoff < 1/n.
BoundsReport multi_bounds_check(const MultiSolution& sol, const ProbabilitySchedule& s,
                                const DensityReport& density);

// Tie probabilities at the equilibrium, with the density bounds.
struct MultiTieReport {
    bool applicable = true;
    std::string reason;
    double sum_cp = 0.0;          // sum_i cp_i(x); the bounded quantity
    double tie_probability = 0.0; // exact tie-event probability sum_i,m cp_i^m / m
    double bound_total = 0.0;     // 8 e n ell / K
    double bound_per_player = 0.0;  // 8 e ell / K, for any pure deviation
    double worst_deviation_cp = 0.0;
    bool total_holds = false;
    bool per_deviation_holds = false;
};

MultiTieReport multi_tie_check(const MultiSolution& sol, const ProbabilitySchedule& s,
                               const DensityReport& density);

// Worst pure-deviation regret of the equilibrium in the tie-splitting race;
// the equilibrium is an (8 e ell / K)-approximate equilibrium there.
struct RegretReport {
    bool applicable = true;
    std::string reason;
    double worst_regret = 0.0;
    int worst_deviation = 0;       // time achieving it
    double bound = 0.0;            // 8 e ell / K
    double bound_two_player = 0.0; // 7(sqrt2-1) ell/K, n = 2 only (else NaN)
    bool holds = false;
};

RegretReport multi_approx_check(const MultiSolution& sol, const ProbabilitySchedule& s,
                                const DensityReport& density);

}  // namespace qrace
