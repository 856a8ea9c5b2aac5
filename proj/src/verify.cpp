#include "qrace/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qrace/closed_form.hpp"

namespace qrace {
namespace {

constexpr double kTieBand = 1e-12;

// Worst deviation info from a payoff vector and the holder's strategy.
void fold_player(int player, const std::vector<double>& payoffs,
                 const MixedStrategy& own, NashVerdict& verdict) {
    const int k = static_cast<int>(payoffs.size());
    int best_t = 1;
    for (int t = 2; t <= k; ++t) {
        if (payoffs[t - 1] > payoffs[best_t - 1]) best_t = t;
    }
    const double best = payoffs[best_t - 1];
    double current = 0.0;
    for (int t : own.support()) current += own.weight(t) * payoffs[t - 1];
    const double approx_gain = std::max(0.0, best - current);
    double ws_gap = 0.0;
    for (int t : own.support()) ws_gap = std::max(ws_gap, best - payoffs[t - 1]);
    verdict.epsilon_approx = std::max(verdict.epsilon_approx, approx_gain);
    verdict.epsilon_well_supported = std::max(verdict.epsilon_well_supported, ws_gap);
    verdict.worst_deviations.push_back({player, best_t, approx_gain});
}

}  // namespace

BestResponseSet best_response_from_payoffs(std::vector<double> payoffs) {
    BestResponseSet out;
    out.payoffs = std::move(payoffs);
    out.best = *std::max_element(out.payoffs.begin(), out.payoffs.end());
    for (std::size_t i = 0; i < out.payoffs.size(); ++i) {
        if (out.payoffs[i] >= out.best - kTieBand) {
            out.responses.push_back(static_cast<int>(i + 1));
        }
    }
    return out;
}

BestResponseSet best_response_set(const PayoffMatrix& m, const MixedStrategy& y) {
    if (y.size() != m.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<double> payoffs(static_cast<std::size_t>(m.size()));
    for (int i = 1; i <= m.size(); ++i) {
        double v = 0.0;
        for (int j : y.support()) v += m.at(i, j) * y.weight(j);
        payoffs[i - 1] = v;
    }
    return best_response_from_payoffs(std::move(payoffs));
}

std::vector<double> race_row_payoffs(const ProbabilitySchedule& row,
                                     const ProbabilitySchedule& col, Variant v,
                                     const MixedStrategy& y) {
    const int k = row.size();
    if (col.size() != k || y.size() != k) throw std::invalid_argument("dimension mismatch");
    std::vector<double> out(static_cast<std::size_t>(k));
    double later = 0.0;  // sum_{j>i} y_j
    for (int j = 1; j <= k; ++j) later += y.weight(j);
    double earlier_fail = 0.0;  // sum_{j<=i} y_j (1-P_j)
    for (int i = 1; i <= k; ++i) {
        later -= y.weight(i);
        earlier_fail += y.weight(i) * col.pbar(i);
        double value = row.p(i) * (earlier_fail + later);
        if (v == Variant::kTieSplitting) value += 0.5 * row.p(i) * col.p(i) * y.weight(i);
        out[i - 1] = value;
    }
    return out;
}

std::vector<double> race_col_payoffs(const ProbabilitySchedule& row,
                                     const ProbabilitySchedule& col, Variant v,
                                     const MixedStrategy& x) {
    const int k = row.size();
    if (col.size() != k || x.size() != k) throw std::invalid_argument("dimension mismatch");
    std::vector<double> out(static_cast<std::size_t>(k));
    double later = 0.0;
    for (int i = 1; i <= k; ++i) later += x.weight(i);
    double earlier_fail = 0.0;
    for (int j = 1; j <= k; ++j) {
        later -= x.weight(j);
        earlier_fail += x.weight(j) * row.pbar(j);
        double value = col.p(j) * (earlier_fail + later);
        if (v == Variant::kTieSplitting) value += 0.5 * row.p(j) * col.p(j) * x.weight(j);
        out[j - 1] = value;
    }
    return out;
}

NashVerdict verify_profile(const PayoffMatrix& a, const PayoffMatrix& b,
                           const MixedStrategy& x, const MixedStrategy& y,
                           double tolerance) {
    NashVerdict verdict;
    verdict.tolerance = tolerance;
    fold_player(0, best_response_set(a, y).payoffs, x, verdict);
    // Column player's payoff vector over her own pure strategies: x^T B e_j.
    std::vector<double> col_payoffs(static_cast<std::size_t>(b.size()));
    for (int j = 1; j <= b.size(); ++j) {
        double v = 0.0;
        for (int i : x.support()) v += x.weight(i) * b.at(i, j);
        col_payoffs[j - 1] = v;
    }
    fold_player(1, col_payoffs, y, verdict);
    verdict.is_exact = verdict.epsilon_well_supported <= tolerance;
    return verdict;
}

NashVerdict verify_race_profile(const ProbabilitySchedule& row,
                                const ProbabilitySchedule& col, Variant v,
                                const MixedStrategy& x, const MixedStrategy& y,
                                double tolerance) {
    NashVerdict verdict;
    verdict.tolerance = tolerance;
    fold_player(0, race_row_payoffs(row, col, v, y), x, verdict);
    fold_player(1, race_col_payoffs(row, col, v, x), y, verdict);
    verdict.is_exact = verdict.epsilon_well_supported <= tolerance;
    return verdict;
}

NashVerdict verify_profile_np(const RaceConfig& cfg,
                              const std::vector<MixedStrategy>& profile,
                              double tolerance) {
    NashVerdict verdict;
    verdict.tolerance = tolerance;
    const int k = cfg.k();
    std::vector<double> payoffs(static_cast<std::size_t>(k));
    std::vector<double> tie_weights;
    for (int i = 0; i < cfg.players; ++i) {
        OpponentField field(cfg, i, profile);
        for (int t = 1; t <= k; ++t) {
            double value = field.stingy_utility(t);
            if (cfg.variant == Variant::kTieSplitting) {
                field.tie_weights_at(t, tie_weights);
                for (std::size_t d = 1; d < tie_weights.size(); ++d) {
                    value += cfg.schedule_of(i).p(t) * tie_weights[d] /
                             static_cast<double>(d + 1);
                }
            }
            payoffs[t - 1] = value;
        }
        fold_player(i, payoffs, profile[static_cast<std::size_t>(i)], verdict);
    }
    verdict.is_exact = verdict.epsilon_well_supported <= tolerance;
    return verdict;
}

std::vector<EnumeratedEquilibrium<double>> support_enumeration_2p(const PayoffMatrix& a,
                                                                  const PayoffMatrix& b) {
    Matrix<double> ma(a.size(), a.size());
    Matrix<double> mb(b.size(), b.size());
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) {
            ma.at(i, j) = a.at(i, j);
            mb.at(i, j) = b.at(i, j);
        }
    }
    return support_enumeration(ma, mb);
}

SupportShape classify_support_shape(const std::vector<int>& sup_x,
                                    const std::vector<int>& sup_y, int k) {
    if (sup_x.empty() || sup_y.empty()) return SupportShape::kOther;
    // The union must be an interval ending at K.
    std::vector<int> all;
    std::merge(sup_x.begin(), sup_x.end(), sup_y.begin(), sup_y.end(),
               std::back_inserter(all));
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.back() != k) return SupportShape::kOther;
    const int t0 = all.front();
    if (static_cast<int>(all.size()) != k - t0 + 1) return SupportShape::kOther;
    if (sup_x == sup_y) return SupportShape::kCoinciding;
    const auto& first = sup_x.front() <= sup_y.front() ? sup_x : sup_y;
    const auto& second = sup_x.front() <= sup_y.front() ? sup_y : sup_x;
    if ((k - t0) % 2 == 1 && first == parity_interval(t0, k) &&
        second == parity_interval(t0 + 1, k)) {
        return SupportShape::kAlternating;
    }
    for (int c = t0 + 2; c <= k; c += 2) {
        std::vector<int> expect_first = parity_interval(t0, c - 2);
        for (int t = c; t <= k; ++t) expect_first.push_back(t);
        std::vector<int> expect_second = parity_interval(t0 + 1, c - 1);
        for (int t = c; t <= k; ++t) expect_second.push_back(t);
        if (first == expect_first && second == expect_second) {
            return SupportShape::kAlternatingCoinciding;
        }
    }
    return SupportShape::kOther;
}

}  // namespace qrace
