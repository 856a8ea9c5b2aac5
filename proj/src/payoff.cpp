#include "qrace/payoff.hpp"

#include <stdexcept>
#include <string>

#include "qrace/limits.hpp"

namespace qrace {

PayoffMatrix::PayoffMatrix(int k, Variant variant, Player player)
    : k_(k), variant_(variant), player_(player),
      entries_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0) {}

PayoffMatrix payoff_matrix_2p(const ProbabilitySchedule& row,
                              const ProbabilitySchedule& col,
                              Variant variant, Player player) {
    if (row.size() != col.size()) {
        throw std::invalid_argument("schedules must share K");
    }
    const int k = row.size();
    if (k > limits::max_matrix_k()) {
        throw std::domain_error("K = " + std::to_string(k) +
                                " exceeds the matrix cap; use the matrix-free evaluators");
    }
    PayoffMatrix m(k, variant, player);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            double v;
            if (player == Player::kRow) {
                v = i < j ? row.p(i) : row.p(i) * col.pbar(j);
            } else {
                v = j < i ? col.p(j) : col.p(j) * row.pbar(i);
            }
            if (variant == Variant::kTieSplitting && i == j) {
                v += 0.5 * row.p(i) * col.p(i);
            }
            m.at(i, j) = v;
        }
    }
    return m;
}

double expected_payoff_2p(const PayoffMatrix& m, const MixedStrategy& x,
                          const MixedStrategy& y) {
    if (x.size() != m.size() || y.size() != m.size()) {
        throw std::invalid_argument("strategy dimensions do not match the matrix");
    }
    double total = 0.0;
    for (int i : x.support()) {
        double inner = 0.0;
        for (int j : y.support()) inner += m.at(i, j) * y.weight(j);
        total += x.weight(i) * inner;
    }
    return total;
}

RaceConfig::RaceConfig(int n, ProbabilitySchedule common, Variant v)
    : players(n), schedule(std::move(common)), variant(v) {
    if (n < 2) throw std::invalid_argument("a race needs at least 2 players");
}

RaceConfig::RaceConfig(ProbabilitySchedule row, ProbabilitySchedule col, Variant v)
    : players(2), schedule(std::move(row)), col_schedule(std::move(col)), variant(v) {
    if (schedule.size() != col_schedule->size()) {
        throw std::invalid_argument("schedules must share K");
    }
}

std::vector<double> utility_np_pure(const RaceConfig& cfg,
                                    const std::vector<int>& profile) {
    const int n = cfg.players;
    if (static_cast<int>(profile.size()) != n) {
        throw std::invalid_argument("profile length must equal the player count");
    }
    for (int t : profile) {
        if (t < 1 || t > cfg.k()) throw std::invalid_argument("time out of range");
    }
    std::vector<double> u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double v = cfg.schedule_of(i).p(profile[static_cast<std::size_t>(i)]);
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const int sk = profile[static_cast<std::size_t>(k)];
            if (sk <= profile[static_cast<std::size_t>(i)]) {
                v *= cfg.schedule_of(k).pbar(sk);
            }
        }
        u[static_cast<std::size_t>(i)] = v;
    }
    return u;
}

OpponentField::OpponentField(const RaceConfig& cfg, int player,
                             const std::vector<MixedStrategy>& profile)
    : k_(cfg.k()) {
    const int n = cfg.players;
    if (static_cast<int>(profile.size()) != n) {
        throw std::invalid_argument("profile length must equal the player count");
    }
    if (player < 0 || player >= n) throw std::invalid_argument("player index out of range");
    own_probs_ = cfg.schedule_of(player).probs();
    passive_.reserve(static_cast<std::size_t>(n - 1));
    tie_.reserve(static_cast<std::size_t>(n - 1));
    for (int opp = 0; opp < n; ++opp) {
        if (opp == player) continue;
        const MixedStrategy& x = profile[static_cast<std::size_t>(opp)];
        if (x.size() != k_) throw std::invalid_argument("strategy length must equal K");
        const ProbabilitySchedule& sched = cfg.schedule_of(opp);
        std::vector<double> passive(static_cast<std::size_t>(k_));
        std::vector<double> tie(static_cast<std::size_t>(k_));
        // suffix of plain weights, then sweep the (1-P) prefix forward
        double after = 0.0;
        for (int t = k_; t >= 1; --t) after += x.weight(t);
        double before_fail = 0.0;
        for (int t = 1; t <= k_; ++t) {
            after -= x.weight(t);
            const double at_fail = x.weight(t) * sched.pbar(t);
            passive[static_cast<std::size_t>(t - 1)] = before_fail + at_fail + after;
            tie[static_cast<std::size_t>(t - 1)] = x.weight(t) * sched.p(t);
            before_fail += at_fail;
        }
        passive_.push_back(std::move(passive));
        tie_.push_back(std::move(tie));
    }
}

double OpponentField::stingy_utility(int t) const {
    double v = own_p(t);
    for (const auto& passive : passive_) v *= passive[static_cast<std::size_t>(t - 1)];
    return v;
}

void OpponentField::tie_weights_at(int t, std::vector<double>& out) const {
    // out[d] = elementary symmetric weight for d opponents tying at t,
    // accumulated from prod_k (passive_k + lambda * tie_k).
    const std::size_t n_opp = passive_.size();
    out.assign(n_opp + 1, 0.0);
    out[0] = 1.0;
    std::size_t degree = 0;
    for (std::size_t k = 0; k < n_opp; ++k) {
        const double a = passive_[k][static_cast<std::size_t>(t - 1)];
        const double b = tie_[k][static_cast<std::size_t>(t - 1)];
        ++degree;
        for (std::size_t d = degree; d-- > 0;) {
            out[d + 1] += out[d] * b;
            out[d] *= a;
        }
    }
}

double utility_np_mixed(const RaceConfig& cfg, int player,
                        const std::vector<MixedStrategy>& profile, int t) {
    if (t < 1 || t > cfg.k()) throw std::invalid_argument("time out of range");
    OpponentField field(cfg, player, profile);
    return field.stingy_utility(t);
}

double TieProfile::shared() const {
    double s = 0.0;
    for (std::size_t m = 0; m < by_multiplicity.size(); ++m) {
        s += by_multiplicity[m] / static_cast<double>(m + 2);
    }
    return s;
}

TieProfile tie_profile(const RaceConfig& cfg, int player,
                       const std::vector<MixedStrategy>& profile) {
    OpponentField field(cfg, player, profile);
    const MixedStrategy& own = profile[static_cast<std::size_t>(player)];
    const ProbabilitySchedule& sched = cfg.schedule_of(player);
    TieProfile out;
    out.by_multiplicity.assign(static_cast<std::size_t>(cfg.players - 1), 0.0);
    std::vector<double> weights;
    for (int t : own.support()) {
        field.tie_weights_at(t, weights);
        const double succeed = own.weight(t) * sched.p(t);
        for (std::size_t d = 1; d < weights.size(); ++d) {
            out.by_multiplicity[d - 1] += succeed * weights[d];
        }
    }
    for (double v : out.by_multiplicity) out.total += v;
    return out;
}

double utility_np_stingy(const RaceConfig& cfg, int player,
                         const std::vector<MixedStrategy>& profile) {
    OpponentField field(cfg, player, profile);
    const MixedStrategy& own = profile[static_cast<std::size_t>(player)];
    double u = 0.0;
    for (int t : own.support()) u += own.weight(t) * field.stingy_utility(t);
    return u;
}

double utility_np_quantum(const RaceConfig& cfg, int player,
                          const std::vector<MixedStrategy>& profile) {
    return utility_np_stingy(cfg, player, profile) +
           tie_profile(cfg, player, profile).shared();
}

double nobody_succeeds_probability(const RaceConfig& cfg,
                                   const std::vector<MixedStrategy>& profile) {
    double prod = 1.0;
    for (int k = 0; k < cfg.players; ++k) {
        const MixedStrategy& x = profile[static_cast<std::size_t>(k)];
        const ProbabilitySchedule& sched = cfg.schedule_of(k);
        double fail = 0.0;
        for (int t : x.support()) fail += x.weight(t) * sched.pbar(t);
        prod *= fail;
    }
    return prod;
}

}  // namespace qrace
