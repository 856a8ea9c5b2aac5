#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qrace/payoff.hpp"
#include "qrace/schedule.hpp"
#include "qrace/strategy.hpp"

namespace qrace {

// Closed-form quantities of the coinciding system for both players.
// Vectors are indexed by time with slot [0] unused; undefined entries
// (r at K when the acting side's p_K = 1) hold NaN.
struct CoincidingInternals {
    std::vector<double> q_row, r_row, z_row;  // row player's weights (A side)
    std::vector<double> q_col, r_col, z_col;  // column player's weights (B side)
    int t_star_row = 0;
    int t_star_col = 0;
    bool marginal_row = false;  // |r[T*-1]| < 1e-12: support decision is fragile
    bool marginal_col = false;
};

CoincidingInternals coinciding_internals(const ProbabilitySchedule& row,
                                         const ProbabilitySchedule& col);

enum class EquilibriumKind { kCoinciding, kAlternating, kAlternatingCoinciding };

std::string to_string(EquilibriumKind kind);

struct EquilibriumSolution {
    EquilibriumKind kind = EquilibriumKind::kCoinciding;
    int start_t = 0;
    int change_c = 0;  // alternating-coinciding only
    MixedStrategy row, col;
    double payoff_row = 0.0;
    double payoff_col = 0.0;
    // Symmetric games: swapping the players' roles gives another equilibrium
    // (trivially so for coinciding ones, where row == col).
    bool swap_also_equilibrium = false;
};

// Returned when T*_row != T*_col: no coinciding equilibrium exists.  Each
// candidate is the unique solution of that player's one-sided system.
struct NoCoincidingEquilibrium {
    int t_star_row = 0;
    int t_star_col = 0;
    MixedStrategy candidate_row, candidate_col;
};

std::variant<EquilibriumSolution, NoCoincidingEquilibrium> coinciding_equilibrium(
    const ProbabilitySchedule& row, const ProbabilitySchedule& col);

// Symmetric race: the coinciding equilibrium always exists and row == col.
EquilibriumSolution coinciding_equilibrium(const ProbabilitySchedule& s);

// Collision quantities of the symmetric coinciding equilibrium.
//   sigma = p_{T*}^2 r_{T*}^2 + sum_{i>T*} p_i^2 q_i^2 (unnormalized),
//   tie probability = sigma / z^2, no-winner probability = (1/(p_K z))^2,
// and 2/z + sigma/z^2 + (1/(p_K z))^2 = 1.
struct CollisionAnalytics {
    double sigma = 0.0;
    double tie_probability = 0.0;
    double no_winner_probability = 0.0;
};

CollisionAnalytics collision_analytics(const EquilibriumSolution& sol,
                                       const ProbabilitySchedule& s);

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct BoundsReport {
    bool applicable = true;
    std::string reason;  // why inapplicable
    std::vector<BoundCheck> checks;

    bool all_hold() const;
};

// Verifies the payoff window of the symmetric coinciding equilibrium for an
// ell-dense schedule with K >= 6 ell:  1/z <= sqrt2-1,  z <= sqrt2+1+tau,
// 1/z >= sqrt2-1-tau(sqrt2-1)^2,  p_{T*} >= 1/z,  p_{T*} > 5/21, and
// p_{T*-1} <= sqrt2-1 whenever T* >= 2.
BoundsReport payoff_bounds_check(const EquilibriumSolution& sol,
                                 const ProbabilitySchedule& s,
                                 const DensityReport& density);

// Tie bounds at the same preconditions: sigma/z^2 <= 6 ell/K, sigma <= 196 ell/K.
BoundsReport collision_bounds_check(const EquilibriumSolution& sol,
                                    const ProbabilitySchedule& s,
                                    const DensityReport& density);

}  // namespace qrace
