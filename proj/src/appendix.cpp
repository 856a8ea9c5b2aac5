#include "qrace/appendix.hpp"

#include <cmath>
#include <limits>

#include "qrace/closed_form.hpp"

namespace qrace {

std::vector<int> parity_interval(int t, int k) {
    std::vector<int> out;
    for (int i = t; i <= k; i += 2) out.push_back(i);
    return out;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

AlternatingInternals from_core(const closed_form::AlternatingCore<double>& core) {
    AlternatingInternals out;
    const std::size_t n = core.q.size();
    out.q.assign(n, kNaN);
    out.r.assign(n, kNaN);
    out.z.assign(n, kNaN);
    out.r_end.assign(n, kNaN);
    out.z_end.assign(n, kNaN);
    for (std::size_t t = 2; t + 1 < n; ++t) out.q[t] = core.q[t];
    for (std::size_t t = 1; t < n; ++t) {
        if (core.defined[t]) {
            out.r[t] = core.r[t];
            out.z[t] = core.z[t];
            out.r_end[t] = core.r_end[t];
            out.z_end[t] = core.z_end[t];
        }
    }
    out.t_star = core.t_star;
    out.end_weight_positive = core.end_weight_positive;
    out.top_deviation_ok = core.top_deviation_ok;
    out.low_deviation_ok = core.low_deviation_ok;
    out.exists = core.exists;
    out.marginal = core.marginal;
    return out;
}

}  // namespace

AlternatingInternals alternating_internals(const ProbabilitySchedule& s) {
    return from_core(closed_form::alternating_core(s.probs()));
}

std::variant<EquilibriumSolution, NoAlternatingEquilibrium> alternating_equilibrium(
    const ProbabilitySchedule& s) {
    const auto core = closed_form::alternating_core(s.probs());
    if (!core.exists) {
        std::string reason;
        if (!core.end_weight_positive) reason = "weight at K would be nonpositive";
        else if (!core.top_deviation_ok) reason = "deviation to K beats the support";
        else reason = "deviation below the support beats it";
        return NoAlternatingEquilibrium{from_core(core), std::move(reason)};
    }
    std::vector<double> early, late;
    closed_form::alternating_weights(core, s.size(), early, late);
    EquilibriumSolution sol{EquilibriumKind::kAlternating,
                            core.t_star,
                            0,
                            MixedStrategy(std::move(early)),
                            MixedStrategy(std::move(late)),
                            1.0 / core.z_end[core.t_star],
                            1.0 / core.z[core.t_star],
                            true};
    return sol;
}

AltCoincidingScan alt_coinciding_scan(const ProbabilitySchedule& s) {
    AltCoincidingScan out;
    for (auto& cand : closed_form::alt_coinciding_scan(s.probs())) {
        out.candidates.push_back({cand.start_t, cand.change_c, cand.low_deviation_ok,
                                  cand.change_deviation_ok, cand.change_weights_positive,
                                  cand.feasible});
        if (cand.feasible) {
            out.solutions.push_back({EquilibriumKind::kAlternatingCoinciding,
                                     cand.start_t,
                                     cand.change_c,
                                     MixedStrategy(std::move(cand.x)),
                                     MixedStrategy(std::move(cand.y)),
                                     1.0 / cand.z_col,
                                     1.0 / cand.z_row,
                                     true});
        }
    }
    return out;
}

std::vector<EquilibriumSolution> alt_coinciding_equilibria(const ProbabilitySchedule& s) {
    return alt_coinciding_scan(s).solutions;
}

StartRelations tstar_relations_check(const ProbabilitySchedule& s) {
    StartRelations out;
    out.convex = convexity_report(s).is_convex;
    const auto side = closed_form::side_internals(s.probs(), s.probs());
    const auto alt = closed_form::alternating_core(s.probs());
    out.t_star = side.t_star;
    out.t_star_alternating = alt.t_star;
    out.general_bound_holds = side.t_star <= alt.t_star + 1;
    if (out.convex) {
        const bool odd_gap = (s.size() - side.t_star) % 2 == 1;
        out.parity_relation_holds =
            odd_gap ? alt.t_star == side.t_star
                    : (alt.t_star == side.t_star - 1 || alt.t_star == side.t_star + 1);
    }
    return out;
}

}  // namespace qrace
