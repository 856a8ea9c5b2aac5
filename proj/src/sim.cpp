#include "qrace/sim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrace/constants.hpp"
#include "qrace/limits.hpp"
#include "qrace/multiplayer.hpp"
#include "qrace/schedule.hpp"

namespace qrace {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

KeyedRng::KeyedRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t player)
    : state_(splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ player)) {}

double KeyedRng::next_unit() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double SimResult::win_frequency(int player) const {
    return static_cast<double>(win_counts[static_cast<std::size_t>(player)]) /
           static_cast<double>(trials);
}

double SimResult::tie_frequency() const {
    std::int64_t total = 0;
    for (std::int64_t c : tie_counts) total += c;
    return static_cast<double>(total) / static_cast<double>(trials);
}

double SimResult::tie_frequency(int multiplicity) const {
    return static_cast<double>(tie_counts[static_cast<std::size_t>(multiplicity - 2)]) /
           static_cast<double>(trials);
}

double SimResult::no_winner_frequency() const {
    return static_cast<double>(no_winner_count) / static_cast<double>(trials);
}

double SimResult::payoff_estimate(int player) const {
    return payoff_sums[static_cast<std::size_t>(player)] / static_cast<double>(trials);
}

double SimResult::payoff_standard_error(int player) const {
    const double n = static_cast<double>(trials);
    const double mean = payoff_estimate(player);
    const double var =
        payoff_sq_sums[static_cast<std::size_t>(player)] / n - mean * mean;
    return std::sqrt(std::max(0.0, var) / n);
}

double SimResult::frequency_standard_error(double frequency) const {
    const double n = static_cast<double>(trials);
    return std::sqrt(std::max(0.0, frequency * (1.0 - frequency)) / n);
}

SimResult run_simulation(const SimConfig& config) {
    const int n = config.race.players;
    if (config.trials < 1) throw std::invalid_argument("need at least one trial");
    if (static_cast<int>(config.profile.size()) != n) {
        throw std::invalid_argument("profile length must equal the player count");
    }
    const int k = config.race.k();
    for (const MixedStrategy& x : config.profile) {
        if (x.size() != k) throw std::invalid_argument("strategy length must equal K");
    }
    // Per-player cumulative weights for inverse-CDF sampling.
    std::vector<std::vector<double>> cumulative(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& cum = cumulative[static_cast<std::size_t>(i)];
        cum.resize(static_cast<std::size_t>(k));
        double acc = 0.0;
        for (int t = 1; t <= k; ++t) {
            acc += config.profile[static_cast<std::size_t>(i)].weight(t);
            cum[static_cast<std::size_t>(t - 1)] = acc;
        }
        cum.back() = 1.0;
    }
    SimResult result;
    result.trials = config.trials;
    result.seed = config.seed;
    result.win_counts.assign(static_cast<std::size_t>(n), 0);
    result.tie_counts.assign(static_cast<std::size_t>(n - 1), 0);
    result.payoff_sums.assign(static_cast<std::size_t>(n), 0.0);
    result.payoff_sq_sums.assign(static_cast<std::size_t>(n), 0.0);
    const bool split = config.race.variant == Variant::kTieSplitting;
    std::vector<int> times(static_cast<std::size_t>(n));
    std::vector<char> success(static_cast<std::size_t>(n));
    for (std::int64_t trial = 0; trial < config.trials; ++trial) {
        int first_time = k + 1;
        for (int i = 0; i < n; ++i) {
            KeyedRng rng(config.seed, static_cast<std::uint64_t>(trial),
                         static_cast<std::uint64_t>(i));
            const double u_time = rng.next_unit();
            const auto& cum = cumulative[static_cast<std::size_t>(i)];
            int lo = 0, hi = k - 1;
            while (lo < hi) {
                const int mid = (lo + hi) / 2;
                if (cum[static_cast<std::size_t>(mid)] > u_time) hi = mid;
                else lo = mid + 1;
            }
            const int t = lo + 1;
            times[static_cast<std::size_t>(i)] = t;
            const double u_succ = rng.next_unit();
            const bool ok = u_succ < config.race.schedule_of(i).p(t);
            success[static_cast<std::size_t>(i)] = ok ? 1 : 0;
            if (ok && t < first_time) first_time = t;
        }
        if (first_time > k) {
            ++result.no_winner_count;
            continue;
        }
        int m = 0;
        for (int i = 0; i < n; ++i) {
            if (success[static_cast<std::size_t>(i)] &&
                times[static_cast<std::size_t>(i)] == first_time) {
                ++m;
            }
        }
        if (m == 1) {
            for (int i = 0; i < n; ++i) {
                if (success[static_cast<std::size_t>(i)] &&
                    times[static_cast<std::size_t>(i)] == first_time) {
                    ++result.win_counts[static_cast<std::size_t>(i)];
                    result.payoff_sums[static_cast<std::size_t>(i)] += 1.0;
                    result.payoff_sq_sums[static_cast<std::size_t>(i)] += 1.0;
                }
            }
        } else {
            ++result.tie_counts[static_cast<std::size_t>(m - 2)];
            if (split) {
                const double share = 1.0 / static_cast<double>(m);
                for (int i = 0; i < n; ++i) {
                    if (success[static_cast<std::size_t>(i)] &&
                        times[static_cast<std::size_t>(i)] == first_time) {
                        result.payoff_sums[static_cast<std::size_t>(i)] += share;
                        result.payoff_sq_sums[static_cast<std::size_t>(i)] += share * share;
                    }
                }
            }
        }
    }
    return result;
}

std::vector<SweepRow> fork_rate_sweep(const std::vector<double>& n_items_list,
                                      const std::vector<int>& player_counts,
                                      std::int64_t trials, std::uint64_t seed) {
    std::vector<SweepRow> rows;
    for (double n_items : n_items_list) {
        const std::int64_t k = grover_strategy_count(n_items);
        const bool materializable = k <= limits::max_materialized_k();
        for (int n : player_counts) {
            SweepRow row;
            row.n_items = n_items;
            row.k = k;
            row.players = n;
            row.trials = trials;
            row.seed = seed;
            if (!materializable) {
                row.analytic_only = true;
                row.ell = std::numbers::pi / 2.0;
                row.tie_bound =
                    bounds::total_tie_bound(n, row.ell, static_cast<double>(k));
                rows.push_back(row);
                continue;
            }
            const ProbabilitySchedule sched =
                grover_schedule(static_cast<std::int64_t>(n_items));
            const DensityReport density = density_report(sched);
            row.ell = density.ell;
            row.tie_bound = bounds::total_tie_bound(n, row.ell, static_cast<double>(k));
            const MultiSolution sol = multi_coinciding_equilibrium(sched, n);
            row.t_star = sol.internals.t_star;
            row.analytic_payoff = sol.per_player_payoff;
            RaceConfig cfg(n, sched, Variant::kStingy);
            std::vector<MixedStrategy> profile(static_cast<std::size_t>(n), sol.strategy);
            row.analytic_tie = n * tie_profile(cfg, 0, profile).shared();
            SimConfig sim{trials, seed, cfg, profile};
            row.empirical_tie = run_simulation(sim).tie_frequency();
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace qrace
