#include "qrace/multiplayer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qrace/closed_form.hpp"
#include "qrace/constants.hpp"

namespace qrace {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

ProbabilitySchedule reduced_game(const ProbabilitySchedule& s, int n) {
    if (n < 2) throw std::invalid_argument("a race needs at least 2 players");
    if (n == 2) return s;
    std::vector<double> probs(s.probs());
    const double inv = 1.0 / static_cast<double>(n - 1);
    for (double& p : probs) p = std::exp(std::log(p) * inv);
    // The root can collapse near-equal neighbours; surface that rather than
    // perturbing values.
    for (std::size_t i = 1; i < probs.size(); ++i) {
        if (!(probs[i] > probs[i - 1])) {
            throw std::domain_error("reduced schedule lost strict monotonicity at index " +
                                    std::to_string(i + 1));
        }
    }
    return ProbabilitySchedule(std::move(probs));
}

MultiSolution multi_coinciding_equilibrium(const ProbabilitySchedule& s, int n) {
    MultiInternals internals{reduced_game(s, n), {}, {}, {}, 0};
    const auto side = closed_form::side_internals(s.probs(), internals.reduced.probs());
    const std::size_t up = side.q.size();
    internals.q.assign(up, kNaN);
    internals.r.assign(up, kNaN);
    internals.z.assign(up, kNaN);
    for (std::size_t t = 2; t < up; ++t) internals.q[t] = side.q[t];
    for (std::size_t t = 1; t < up; ++t) {
        if (side.r_defined[t]) {
            internals.r[t] = side.r[t];
            internals.z[t] = side.z[t];
        }
    }
    internals.t_star = side.t_star;
    MixedStrategy strategy(closed_form::coinciding_weights(side));
    const double payoff = std::pow(1.0 / side.z[side.t_star], n - 1);
    return MultiSolution{n, std::move(internals), std::move(strategy), payoff};
}

BoundsReport multi_bounds_check(const MultiSolution& sol, const ProbabilitySchedule& s,
                                const DensityReport& density) {
    BoundsReport report;
    const int n = sol.n;
    const double inv_n = 1.0 / static_cast<double>(n);
    const int t0 = sol.internals.t_star;
    if (t0 >= 2) {
        report.checks.push_back(
            {"P(T*-1) < 1/n", s.p(t0 - 1), inv_n, s.p(t0 - 1) < inv_n});
    }
    report.checks.push_back({"per-player payoff < 1/n", sol.per_player_payoff, inv_n,
                             sol.per_player_payoff < inv_n});
    const double k = static_cast<double>(s.size());
    if (bounds::density_requirement_np(n, density.ell) > k) {
        report.reason = "4enl <= K fails: lower bound on P(T*-1) not applicable";
    } else if (t0 >= 2) {
        const double floor = 1.0 / (2.0 * bounds::kE * n);
        report.checks.push_back(
            {"P(T*-1) >= 1/(2en)", s.p(t0 - 1), floor, s.p(t0 - 1) >= floor});
    }
    return report;
}

MultiTieReport multi_tie_check(const MultiSolution& sol, const ProbabilitySchedule& s,
                               const DensityReport& density) {
    MultiTieReport report;
    const int n = sol.n;
    const double k = static_cast<double>(s.size());
    if (bounds::density_requirement_np(n, density.ell) > k) {
        report.applicable = false;
        report.reason = "4enl > K";
        return report;
    }
    RaceConfig cfg(n, s, Variant::kStingy);
    std::vector<MixedStrategy> profile(static_cast<std::size_t>(n), sol.strategy);
    // All players are interchangeable here, so one tie profile carries all i.
    const TieProfile tp = tie_profile(cfg, 0, profile);
    report.sum_cp = n * tp.total;
    report.tie_probability = n * tp.shared();
    report.bound_total = bounds::total_tie_bound(n, density.ell, k);
    report.bound_per_player = bounds::per_player_tie_bound(density.ell, k);
    report.total_holds = report.sum_cp <= report.bound_total;
    double worst = 0.0;
    for (int t = 1; t <= s.size(); ++t) {
        profile[0] = MixedStrategy::pure(t, s.size());
        const double cp = tie_profile(cfg, 0, profile).total;
        if (cp > worst) worst = cp;
    }
    report.worst_deviation_cp = worst;
    report.per_deviation_holds = worst <= report.bound_per_player;
    return report;
}

RegretReport multi_approx_check(const MultiSolution& sol, const ProbabilitySchedule& s,
                                const DensityReport& density) {
    RegretReport report;
    const int n = sol.n;
    const double k = static_cast<double>(s.size());
    if (bounds::density_requirement_np(n, density.ell) > k) {
        report.applicable = false;
        report.reason = "4enl > K";
        return report;
    }
    RaceConfig cfg(n, s, Variant::kTieSplitting);
    std::vector<MixedStrategy> profile(static_cast<std::size_t>(n), sol.strategy);
    const double value = utility_np_quantum(cfg, 0, profile);
    // u' is linear in the deviating player's own strategy, so the best
    // deviation is pure.  Opponent aggregates are shared across all t.
    OpponentField field(cfg, 0, profile);
    double worst = 0.0;
    int worst_t = 0;
    std::vector<double> tie_weights;
    for (int t = 1; t <= s.size(); ++t) {
        double dev = field.stingy_utility(t);
        field.tie_weights_at(t, tie_weights);
        for (std::size_t d = 1; d < tie_weights.size(); ++d) {
            dev += s.p(t) * tie_weights[d] / static_cast<double>(d + 1);
        }
        if (dev - value > worst) {
            worst = dev - value;
            worst_t = t;
        }
    }
    report.worst_regret = worst;
    report.worst_deviation = worst_t;
    report.bound = bounds::per_player_tie_bound(density.ell, k);
    report.bound_two_player =
        n == 2 ? bounds::well_supported_bound(density.ell, k) : kNaN;
    report.holds = worst <= report.bound;
    return report;
}

}  // namespace qrace
