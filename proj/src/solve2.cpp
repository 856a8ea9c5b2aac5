#include "qrace/solve2.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qrace/closed_form.hpp"
#include "qrace/constants.hpp"

namespace qrace {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void copy_side(const closed_form::SideInternals<double>& side, std::vector<double>& q,
               std::vector<double>& r, std::vector<double>& z) {
    const std::size_t n = side.q.size();
    q.assign(n, kNaN);
    r.assign(n, kNaN);
    z.assign(n, kNaN);
    for (std::size_t t = 2; t < n; ++t) q[t] = side.q[t];
    for (std::size_t t = 1; t < n; ++t) {
        if (side.r_defined[t]) {
            r[t] = side.r[t];
            z[t] = side.z[t];
        }
    }
}

}  // namespace

std::string to_string(EquilibriumKind kind) {
    switch (kind) {
        case EquilibriumKind::kCoinciding: return "coinciding";
        case EquilibriumKind::kAlternating: return "alternating";
        case EquilibriumKind::kAlternatingCoinciding: return "alternating-coinciding";
    }
    return "unknown";
}

bool BoundsReport::all_hold() const {
    if (!applicable) return false;
    for (const auto& c : checks) {
        if (!c.holds) return false;
    }
    return true;
}

CoincidingInternals coinciding_internals(const ProbabilitySchedule& row,
                                         const ProbabilitySchedule& col) {
    if (row.size() != col.size()) throw std::invalid_argument("schedules must share K");
    const auto side_row = closed_form::side_internals(row.probs(), col.probs());
    const auto side_col = closed_form::side_internals(col.probs(), row.probs());
    CoincidingInternals out;
    copy_side(side_row, out.q_row, out.r_row, out.z_row);
    copy_side(side_col, out.q_col, out.r_col, out.z_col);
    out.t_star_row = side_row.t_star;
    out.t_star_col = side_col.t_star;
    out.marginal_row = side_row.marginal;
    out.marginal_col = side_col.marginal;
    return out;
}

std::variant<EquilibriumSolution, NoCoincidingEquilibrium> coinciding_equilibrium(
    const ProbabilitySchedule& row, const ProbabilitySchedule& col) {
    const auto side_row = closed_form::side_internals(row.probs(), col.probs());
    const auto side_col = closed_form::side_internals(col.probs(), row.probs());
    MixedStrategy x(closed_form::coinciding_weights(side_row));
    MixedStrategy y(closed_form::coinciding_weights(side_col));
    if (side_row.t_star != side_col.t_star) {
        return NoCoincidingEquilibrium{side_row.t_star, side_col.t_star,
                                       std::move(x), std::move(y)};
    }
    EquilibriumSolution sol{EquilibriumKind::kCoinciding,
                            side_row.t_star,
                            0,
                            std::move(x),
                            std::move(y),
                            // row plays against y (col-side system), so the
                            // row payoff is the col normalizer's reciprocal
                            1.0 / side_col.z[side_col.t_star],
                            1.0 / side_row.z[side_row.t_star],
                            row.probs() == col.probs()};
    return sol;
}

EquilibriumSolution coinciding_equilibrium(const ProbabilitySchedule& s) {
    auto outcome = coinciding_equilibrium(s, s);
    return std::get<EquilibriumSolution>(std::move(outcome));
}

CollisionAnalytics collision_analytics(const EquilibriumSolution& sol,
                                       const ProbabilitySchedule& s) {
    if (sol.kind != EquilibriumKind::kCoinciding) {
        throw std::invalid_argument("collision analytics needs a coinciding solution");
    }
    if (!(sol.row == sol.col)) {
        throw std::invalid_argument("collision analytics needs a symmetric solution");
    }
    const auto side = closed_form::side_internals(s.probs(), s.probs());
    const int t0 = side.t_star;
    if (t0 != sol.start_t) throw std::invalid_argument("solution does not match schedule");
    const int k = s.size();
    CompensatedSum sigma;
    sigma.add(s.p(t0) * s.p(t0) * side.r[t0] * side.r[t0]);
    for (int i = t0 + 1; i <= k; ++i) sigma.add(s.p(i) * s.p(i) * side.q[i] * side.q[i]);
    const double z = side.z[t0];
    CollisionAnalytics out;
    out.sigma = sigma.value();
    out.tie_probability = out.sigma / (z * z);
    const double miss = 1.0 / (s.p(k) * z);
    out.no_winner_probability = miss * miss;
    return out;
}

BoundsReport payoff_bounds_check(const EquilibriumSolution& sol,
                                 const ProbabilitySchedule& s,
                                 const DensityReport& density) {
    BoundsReport report;
    const double k = static_cast<double>(s.size());
    if (k < bounds::density_requirement_2p(density.ell)) {
        report.applicable = false;
        report.reason = "K < 6 ell";
        return report;
    }
    const double payoff = sol.payoff_row;
    const double z = 1.0 / payoff;
    const double tau = bounds::payoff_slack(density.ell, k);
    const int t0 = sol.start_t;
    report.checks.push_back({"payoff <= sqrt2-1", payoff, bounds::kPayoffCap,
                             payoff <= bounds::kPayoffCap});
    report.checks.push_back({"z <= sqrt2+1+tau", z, bounds::kSqrt2 + 1.0 + tau,
                             z <= bounds::kSqrt2 + 1.0 + tau});
    const double lower = bounds::payoff_lower_bound(density.ell, k);
    report.checks.push_back({"payoff >= sqrt2-1-tau(sqrt2-1)^2", payoff, lower,
                             payoff >= lower});
    report.checks.push_back({"p(T*) >= payoff", s.p(t0), payoff, s.p(t0) >= payoff});
    report.checks.push_back({"p(T*) > 5/21", s.p(t0), bounds::kStartProbFloor,
                             s.p(t0) > bounds::kStartProbFloor});
    if (t0 >= 2) {
        report.checks.push_back({"p(T*-1) <= sqrt2-1", s.p(t0 - 1), bounds::kPayoffCap,
                                 s.p(t0 - 1) <= bounds::kPayoffCap});
    }
    return report;
}

BoundsReport collision_bounds_check(const EquilibriumSolution& sol,
                                    const ProbabilitySchedule& s,
                                    const DensityReport& density) {
    BoundsReport report;
    const double k = static_cast<double>(s.size());
    if (k < bounds::density_requirement_2p(density.ell)) {
        report.applicable = false;
        report.reason = "K < 6 ell";
        return report;
    }
    const CollisionAnalytics col = collision_analytics(sol, s);
    report.checks.push_back({"tie probability <= 6 ell/K", col.tie_probability,
                             bounds::tie_ratio_bound(density.ell, k),
                             col.tie_probability <= bounds::tie_ratio_bound(density.ell, k)});
    report.checks.push_back({"sigma <= 196 ell/K", col.sigma,
                             bounds::sigma_bound(density.ell, k),
                             col.sigma <= bounds::sigma_bound(density.ell, k)});
    return report;
}

}  // namespace qrace
