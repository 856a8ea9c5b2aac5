#pragma once

#include <cmath>
#include <numbers>

// Catalog of the closed-form bound constants used by the solvers and checks.
// Every threshold asserted anywhere in the project is built from these, so a
// bound and its test always agree on the constant.
namespace qrace::bounds {

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kE = std::numbers::e;

// Payoff of the coinciding equilibrium never exceeds sqrt(2) - 1.
inline constexpr double kPayoffCap = kSqrt2 - 1.0;

// Hard lower bound on p_{T*} for ell-dense schedules with K >= 6 ell.
inline constexpr double kStartProbFloor = 5.0 / 21.0;

// Density precondition for the two-player bound suite: K >= 6 ell.
inline double density_requirement_2p(double ell) { return 6.0 * ell; }

// Tie probability of the symmetric coinciding equilibrium: sigma/z^2 <= 6 ell/K.
inline double tie_ratio_bound(double ell, double k) { return 6.0 * ell / k; }

// Unnormalized collision sum: sigma(T*) <= 196 ell/K.
inline double sigma_bound(double ell, double k) { return 196.0 * ell / k; }

// Slack term tau in the payoff window [sqrt2-1 - tau (sqrt2-1)^2, sqrt2-1].
inline double payoff_slack(double ell, double k) { return 50.0 * kSqrt2 * ell / k; }

inline double payoff_lower_bound(double ell, double k) {
    const double tau = payoff_slack(ell, k);
    return kPayoffCap - tau * kPayoffCap * kPayoffCap;
}

// The stingy coinciding equilibrium is a 7(sqrt2-1) ell/K-well-supported
// equilibrium of the tie-splitting race.
inline double well_supported_bound(double ell, double k) {
    return 7.0 * kPayoffCap * ell / k;
}

// Multiplayer density precondition: 4 e n ell <= K.
inline double density_requirement_np(int n, double ell) { return 4.0 * kE * n * ell; }

// Tie probability of one player against the rest: cp_i <= 8 e ell / K.
inline double per_player_tie_bound(double ell, double k) { return 8.0 * kE * ell / k; }

// Total tie probability over n players: sum_i cp_i <= 8 e n ell / K.
inline double total_tie_bound(int n, double ell, double k) {
    return 8.0 * kE * n * ell / k;
}

// Symmetric-equilibrium payoff ceiling: sqrt2 - 1 + 5 sqrt(ell/K).
inline double ceiling_margin(double ell, double k) { return 5.0 * std::sqrt(ell / k); }

inline double payoff_ceiling_value(double ell, double k) {
    return kPayoffCap + ceiling_margin(ell, k);
}

}  // namespace qrace::bounds
