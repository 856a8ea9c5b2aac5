#pragma once

#include <optional>
#include <vector>

#include "qrace/schedule.hpp"
#include "qrace/strategy.hpp"

namespace qrace {

enum class Variant { kStingy, kTieSplitting };
enum class Player { kRow, kColumn };

// K x K payoff matrix of one player in a 2-player race.  With row schedule
// p and column schedule P, the row player's entries are
//   stingy:        A0(i,j) = p_i           if i < j,  p_i (1-P_j)  otherwise;
//   tie-splitting: A(i,j)  = A0(i,j) + [i==j] p_i P_i / 2.
// The column player's matrix is built from its own case analysis, not by
// transposing; in the symmetric case B == A^T holds as a consequence.
class PayoffMatrix {
public:
    PayoffMatrix(int k, Variant variant, Player player);

    int size() const { return k_; }
    Variant variant() const { return variant_; }
    Player player() const { return player_; }

    double at(int i, int j) const { return entries_[idx(i, j)]; }
    double& at(int i, int j) { return entries_[idx(i, j)]; }
    const std::vector<double>& entries() const { return entries_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(k_) +
               static_cast<std::size_t>(j - 1);
    }
    int k_;
    Variant variant_;
    Player player_;
    std::vector<double> entries_;
};

PayoffMatrix payoff_matrix_2p(const ProbabilitySchedule& row,
                              const ProbabilitySchedule& col,
                              Variant variant, Player player);

double expected_payoff_2p(const PayoffMatrix& m, const MixedStrategy& x,
                          const MixedStrategy& y);

// An n-player race over a common schedule, or an asymmetric 2-player race
// over a (row, column) schedule pair of equal length.
struct RaceConfig {
    int players;
    ProbabilitySchedule schedule;
    std::optional<ProbabilitySchedule> col_schedule;  // n == 2 only
    Variant variant = Variant::kStingy;

    RaceConfig(int n, ProbabilitySchedule common, Variant v = Variant::kStingy);
    RaceConfig(ProbabilitySchedule row, ProbabilitySchedule col,
               Variant v = Variant::kStingy);

    int k() const { return schedule.size(); }
    const ProbabilitySchedule& schedule_of(int player) const {
        return (player == 1 && col_schedule) ? *col_schedule : schedule;
    }
};

// Stingy utilities of a pure profile (times 1-based, players 0-based):
//   u_i = P_i(s_i) * prod over k != i with s_k <= s_i of (1 - P_k(s_k)).
std::vector<double> utility_np_pure(const RaceConfig& cfg,
                                    const std::vector<int>& profile);

// Precomputed opponent aggregates for one player against a fixed profile.
// For opponent k,
//   passive(k,t) = sum_{s<=t} x_k(s)(1-P_k(s)) + sum_{s>t} x_k(s)
// is the probability that k neither succeeds strictly before t nor ties a
// success at t, and tie(k,t) = x_k(t) P_k(t) the probability that k ties.
// Build cost O(nK); every per-time query below is O(n) or O(n^2).
class OpponentField {
public:
    OpponentField(const RaceConfig& cfg, int player,
                  const std::vector<MixedStrategy>& profile);

    // Stingy payoff of playing pure time t against the fixed opponents.
    double stingy_utility(int t) const;

    // cp^m contributions at a single time (elementary symmetric weights).
    // out[m-2] accumulates the coefficient for exactly m succeeding, m>=2.
    void tie_weights_at(int t, std::vector<double>& out) const;

    int k() const { return k_; }
    int opponents() const { return static_cast<int>(passive_.size()); }

private:
    int k_;
    double own_p(int t) const { return own_probs_[static_cast<std::size_t>(t - 1)]; }
    std::vector<double> own_probs_;
    std::vector<std::vector<double>> passive_;  // [opponent][t-1]
    std::vector<std::vector<double>> tie_;      // [opponent][t-1]
    friend double utility_np_mixed_field(const OpponentField&, int);
};

// u_i(x_{-i}, t) for the stingy race, O(nK) after prefix sums.
double utility_np_mixed(const RaceConfig& cfg, int player,
                        const std::vector<MixedStrategy>& profile, int t);

// Probabilities that `player` succeeds first with exactly m players tying.
struct TieProfile {
    std::vector<double> by_multiplicity;  // [m-2] = cp^m for m = 2..n
    double total = 0.0;                   // cp = sum_m cp^m

    // Probability mass the tie event contributes to this player's payoff in
    // the tie-splitting race: sum_m cp^m / m.
    double shared() const;
};

TieProfile tie_profile(const RaceConfig& cfg, int player,
                       const std::vector<MixedStrategy>& profile);

// Tie-splitting utility u'_i(x) = u_i(x) + sum_m cp_i^m(x)/m.
double utility_np_quantum(const RaceConfig& cfg, int player,
                          const std::vector<MixedStrategy>& profile);

// Stingy utility of the full mixed profile for one player.
double utility_np_stingy(const RaceConfig& cfg, int player,
                         const std::vector<MixedStrategy>& profile);

// Probability that nobody succeeds: prod_k sum_s x_k(s)(1-P_k(s)).
double nobody_succeeds_probability(const RaceConfig& cfg,
                                   const std::vector<MixedStrategy>& profile);

}  // namespace qrace
