#pragma once

// Scalar-generic closed forms for the equilibrium solvers.  Everything here
// is templated so the same code paths run in double precision (production)
// and in exact rational arithmetic (self-check oracles for small K).
//
// Conventions: schedules are plain vectors indexed 0-based, times are 1-based
// in the formulas; vectors named by time carry a dummy [0] slot.

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qrace/summation.hpp"

namespace qrace {

// D(T,K): every second time from T up to K (same parity) or K-1 (opposite).
std::vector<int> parity_interval(int t, int k);

namespace closed_form {

template <class S>
S one() { return S(1); }

// One side of the coinciding-equilibrium linear system.  With `own` the
// acting player's probabilities and `opp` the opponent's,
//   q[t] = (1/own_t)(1/opp_{t-1} - 1/opp_t)                 for 2 <= t <= K,
//   r[T] = (1/(1-own_T))(1/opp_K - sum_{i>T}(1-own_i)q[i])  for 1 <= T <= K,
//   z[T] = r[T] + sum_{i>T} q[i].
// r[K], z[K] are undefined when own_K == 1.  The acting player's equilibrium
// weights on support {T*,...,K} are r[T*]/z[T*] at T* and q[t]/z[T*] above.
template <class S>
struct SideInternals {
    std::vector<S> q, r, z;
    std::vector<char> r_defined;
    int t_star = 0;     // smallest T with r[T] > 0
    bool marginal = false;  // |r[t_star - 1]| < 1e-12, double runs only
};

template <class S>
SideInternals<S> side_internals(const std::vector<S>& own, const std::vector<S>& opp) {
    const int k = static_cast<int>(own.size());
    if (own.size() != opp.size() || k < 2) {
        throw std::invalid_argument("side_internals: schedules must share K >= 2");
    }
    SideInternals<S> out;
    out.q.assign(static_cast<std::size_t>(k) + 1, S{});
    out.r.assign(static_cast<std::size_t>(k) + 1, S{});
    out.z.assign(static_cast<std::size_t>(k) + 1, S{});
    out.r_defined.assign(static_cast<std::size_t>(k) + 1, 0);
    for (int t = 2; t <= k; ++t) {
        out.q[t] = (one<S>() / own[t - 1]) * (one<S>() / opp[t - 2] - one<S>() / opp[t - 1]);
    }
    detail::sum_t<S> weighted_tail;  // sum_{i>T} (1-own_i) q[i]
    detail::sum_t<S> plain_tail;     // sum_{i>T} q[i]
    const S inv_opp_k = one<S>() / opp[k - 1];
    for (int t = k; t >= 1; --t) {
        if (t < k) {
            weighted_tail.add((one<S>() - own[t]) * out.q[t + 1]);
            plain_tail.add(out.q[t + 1]);
        }
        if (t == k && own[k - 1] == one<S>()) continue;  // r[K] undefined at own_K = 1
        out.r[t] = (one<S>() / (one<S>() - own[t - 1])) * (inv_opp_k - weighted_tail.value());
        out.z[t] = out.r[t] + plain_tail.value();
        out.r_defined[t] = 1;
    }
    out.t_star = 0;
    for (int t = 1; t <= k; ++t) {
        if (out.r_defined[t] && out.r[t] > S{}) { out.t_star = t; break; }
    }
    if (out.t_star == 0) throw std::logic_error("no start index with positive weight");
    if constexpr (std::is_same_v<S, double>) {
        const int below = out.t_star - 1;
        out.marginal = below >= 1 && out.r_defined[below] && std::abs(out.r[below]) < 1e-12;
    }
    return out;
}

// Equilibrium weights of the acting player, supported on {T*,...,K}.
template <class S>
std::vector<S> coinciding_weights(const SideInternals<S>& side) {
    const int k = static_cast<int>(side.q.size()) - 1;
    const int t0 = side.t_star;
    std::vector<S> w(static_cast<std::size_t>(k), S{});
    const S z = side.z[t0];
    w[t0 - 1] = side.r[t0] / z;
    for (int t = t0 + 1; t <= k; ++t) w[t - 1] = side.q[t] / z;
    return w;
}

// Alternating-equilibrium quantities of a symmetric race.  Interior support
// points two apart carry q~[t] = (1/p_t)(1/p_{t-1} - 1/p_{t+1}); the start of
// the early player's support carries r~[T] and the late player puts r_end[T]
// at time K.  Defined for starts with K - T odd.
template <class S>
struct AlternatingCore {
    std::vector<S> q;               // q~[t], 2 <= t <= K-1
    std::vector<S> r, z;            // early side: start weight and normalizer
    std::vector<S> r_end, z_end;    // late side: weight at K and normalizer
    std::vector<char> defined;      // starts with K - T odd
    int t_star = 0;                 // smallest valid start with r > 0
    bool end_weight_positive = false;   // r_end[t_star] > 0
    bool top_deviation_ok = false;      // p_K (1/p_{K-1} - p_K r_end[t_star]) <= 1
    bool low_deviation_ok = true;       // start-2 not defined: p_{T-1} z[T] <= 1 checked directly
    bool exists = false;
    bool marginal = false;              // decision boundary within 1e-12, double runs only
};

template <class S>
AlternatingCore<S> alternating_core(const std::vector<S>& p) {
    const int k = static_cast<int>(p.size());
    if (k < 2) throw std::invalid_argument("alternating_core: K >= 2 required");
    AlternatingCore<S> out;
    const auto up = static_cast<std::size_t>(k) + 1;
    out.q.assign(up, S{});
    out.r.assign(up, S{});
    out.z.assign(up, S{});
    out.r_end.assign(up, S{});
    out.z_end.assign(up, S{});
    out.defined.assign(up, 0);
    for (int t = 2; t <= k - 1; ++t) {
        out.q[t] = (one<S>() / p[t - 1]) * (one<S>() / p[t - 2] - one<S>() / p[t]);
    }
    // Starts T = K-1, K-3, ...; suffix sums over D(T+2,K) and D(T+1,K-2).
    detail::sum_t<S> early_weighted, early_plain;  // over D(T+2,K) = {T+2,...,K-1}
    detail::sum_t<S> late_weighted, late_plain;    // over D(T+1,K-2) = {T+1,...,K-2}
    for (int t = k - 1; t >= 1; t -= 2) {
        if (t + 2 <= k - 1) {
            early_weighted.add((one<S>() - p[t + 1]) * out.q[t + 2]);
            early_plain.add(out.q[t + 2]);
        }
        if (t + 1 <= k - 2) {
            late_weighted.add((one<S>() - p[t]) * out.q[t + 1]);
            late_plain.add(out.q[t + 1]);
        }
        out.r[t] = (one<S>() / (one<S>() - p[t - 1])) * (one<S>() / p[k - 1] - early_weighted.value());
        out.z[t] = out.r[t] + early_plain.value();
        out.r_end[t] = one<S>() / p[k - 2] - late_weighted.value();
        out.z_end[t] = out.r_end[t] + late_plain.value();
        out.defined[t] = 1;
    }
    out.t_star = 0;
    for (int t = 1; t <= k - 1; ++t) {
        if (out.defined[t] && out.r[t] > S{}) { out.t_star = t; break; }
    }
    if (out.t_star == 0) throw std::logic_error("no valid alternating start");
    const int t0 = out.t_star;
    out.end_weight_positive = out.r_end[t0] > S{};
    out.top_deviation_ok =
        p[k - 1] * (one<S>() / p[k - 2] - p[k - 1] * out.r_end[t0]) <= one<S>();
    // The shift argument ruling out a deviation below the support needs the
    // start weight two steps down; at T = 2 there is none, so the constraint
    // p_{T-1} z[T] <= 1 must be checked explicitly.
    if (t0 == 2) out.low_deviation_ok = p[0] * out.z[2] <= one<S>();
    out.exists = out.end_weight_positive && out.top_deviation_ok && out.low_deviation_ok;
    if constexpr (std::is_same_v<S, double>) {
        const int below = t0 - 2;
        out.marginal = below >= 1 && out.defined[below] && std::abs(out.r[below]) < 1e-12;
    }
    return out;
}

// Early player's and late player's weights for the alternating equilibrium.
template <class S>
void alternating_weights(const AlternatingCore<S>& core, int k,
                         std::vector<S>& early, std::vector<S>& late) {
    const int t0 = core.t_star;
    early.assign(static_cast<std::size_t>(k), S{});
    late.assign(static_cast<std::size_t>(k), S{});
    early[t0 - 1] = core.r[t0] / core.z[t0];
    for (int t = t0 + 2; t <= k - 1; t += 2) early[t - 1] = core.q[t] / core.z[t0];
    late[k - 1] = core.r_end[t0] / core.z_end[t0];
    for (int t = t0 + 1; t <= k - 2; t += 2) late[t - 1] = core.q[t] / core.z_end[t0];
}

// One candidate start/change-point pair for an alternating-coinciding
// equilibrium: alternate on {T, T+2, ..., c-2}, coincide on [c, K].
template <class S>
struct AltCoincCandidate {
    int start_t = 0;
    int change_c = 0;
    S r{};                       // start weight of the early player
    S r_end{};                   // suffix value R steering the change-point weights
    S w_before{}, w_at{};        // w_{c-1}, w_c; late weights at c-1, c are
                                 // -w_c/(p_c - p_{c-1}), w_before/(p_c - p_{c-1})
    bool low_deviation_ok = false;
    bool change_deviation_ok = false;
    bool change_weights_positive = false;
    bool feasible = false;
    std::vector<S> x, y;         // normalized weights when feasible
    S z_row{}, z_col{};          // normalizers: sum x' and sum y'
};

template <class S>
std::vector<AltCoincCandidate<S>> alt_coinciding_scan(const std::vector<S>& p) {
    const int k = static_cast<int>(p.size());
    std::vector<AltCoincCandidate<S>> out;
    if (k < 3) return out;
    // Plain and survival-weighted weights of the coinciding tail.
    std::vector<S> q(static_cast<std::size_t>(k) + 1, S{});
    std::vector<S> qt(static_cast<std::size_t>(k) + 1, S{});
    for (int t = 2; t <= k; ++t) {
        q[t] = (one<S>() / p[t - 1]) * (one<S>() / p[t - 2] - one<S>() / p[t - 1]);
    }
    for (int t = 2; t <= k - 1; ++t) {
        qt[t] = (one<S>() / p[t - 1]) * (one<S>() / p[t - 2] - one<S>() / p[t]);
    }
    // Suffix sums of the coinciding block: tail_w[c] = sum_{i>=c} (1-p_i) q_i,
    // tail_q[c] = sum_{i>=c} q_i.
    std::vector<S> tail_w(static_cast<std::size_t>(k) + 2, S{});
    std::vector<S> tail_q(static_cast<std::size_t>(k) + 2, S{});
    for (int c = k; c >= 2; --c) {
        tail_w[c] = tail_w[c + 1] + (one<S>() - p[c - 1]) * q[c];
        tail_q[c] = tail_q[c + 1] + q[c];
    }
    const S inv_pk = one<S>() / p[k - 1];
    for (int c = 3; c <= k; ++c) {
        // Start must share c's parity; the only viable start for this change
        // point is the smallest T with positive start weight.
        int t0 = 0;
        S r_t0{};
        S alt_w{};  // sum over D(T+2,c-2) of (1-p_i) q~_i
        S alt_q{};
        S best_alt_q{};
        for (int t = c - 2; t >= 1; t -= 2) {
            if (t + 2 <= c - 2) {
                alt_w += (one<S>() - p[t + 1]) * qt[t + 2];
                alt_q += qt[t + 2];
            }
            const S r = (one<S>() / (one<S>() - p[t - 1])) * (inv_pk - alt_w - tail_w[c]);
            if (r > S{}) {
                t0 = t;
                r_t0 = r;
                best_alt_q = alt_q;
            }
        }
        if (t0 == 0) continue;
        AltCoincCandidate<S> cand;
        cand.start_t = t0;
        cand.change_c = c;
        cand.r = r_t0;
        // R = 1/p_K - sum_{D(T+1,c-3)} (1-p_i) q~_i - sum_{i>=c+1} (1-p_i) q_i
        S late_w{}, late_q{};
        for (int t = t0 + 1; t <= c - 3; t += 2) {
            late_w += (one<S>() - p[t - 1]) * qt[t];
            late_q += qt[t];
        }
        cand.r_end = inv_pk - late_w - tail_w[c + 1];
        const S dp = p[c - 1] - p[c - 2];
        cand.w_before = (one<S>() - p[c - 2]) * p[c - 2] * qt[c - 1] - p[c - 2] * cand.r_end;
        cand.w_at = (one<S>() - p[c - 1]) * p[c - 2] * qt[c - 1] - p[c - 1] * cand.r_end;
        const S y_before = -cand.w_at / dp;  // late weight at c-1
        const S y_at = cand.w_before / dp;   // late weight at c
        cand.change_weights_positive = y_before > S{} && y_at > S{};
        const S z_row = cand.r + best_alt_q + tail_q[c];
        cand.low_deviation_ok = t0 == 1 || one<S>() / p[t0 - 2] >= z_row;
        // Early player deviating to c-1 (not in her support) must not gain.
        const S dev_c1 = late_w + (one<S>() - p[c - 2]) * y_before + y_at + tail_q[c + 1];
        cand.change_deviation_ok = one<S>() / p[c - 2] >= dev_c1;
        cand.feasible = cand.change_weights_positive && cand.low_deviation_ok &&
                        cand.change_deviation_ok;
        if (cand.feasible) {
            cand.z_row = z_row;
            cand.z_col = late_q + y_before + y_at + tail_q[c + 1];
            cand.x.assign(static_cast<std::size_t>(k), S{});
            cand.y.assign(static_cast<std::size_t>(k), S{});
            cand.x[t0 - 1] = cand.r / z_row;
            for (int t = t0 + 2; t <= c - 2; t += 2) cand.x[t - 1] = qt[t] / z_row;
            for (int t = c; t <= k; ++t) cand.x[t - 1] = q[t] / z_row;
            for (int t = t0 + 1; t <= c - 3; t += 2) cand.y[t - 1] = qt[t] / cand.z_col;
            cand.y[c - 2] = y_before / cand.z_col;
            cand.y[c - 1] = y_at / cand.z_col;
            for (int t = c + 1; t <= k; ++t) cand.y[t - 1] = q[t] / cand.z_col;
        }
        out.push_back(std::move(cand));
    }
    return out;
}

}  // namespace closed_form
}  // namespace qrace
