// Command-line front end: schedule construction, equilibrium solving,
// verification, bound suites, simulation, and the proof-of-work preset.
// JSON goes to stdout (or --output); sweeps are CSV.  Exit codes: 0 success,
// 1 domain error (or inapplicable precondition under --strict), 2 usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrace/appendix.hpp"
#include "qrace/constants.hpp"
#include "qrace/dual.hpp"
#include "qrace/io.hpp"
#include "qrace/limits.hpp"
#include "qrace/multiplayer.hpp"
#include "qrace/sim.hpp"
#include "qrace/solve2.hpp"
#include "qrace/verify.hpp"

using nlohmann::json;
using namespace qrace;

namespace {

struct ScheduleArgs {
    std::int64_t grover_n = 0;
    std::vector<double> probs;
    std::string file;
};

void add_schedule_flags(CLI::App* cmd, ScheduleArgs& args, const char* suffix = "") {
    auto* g = cmd->add_option(std::string("--grover-N") + suffix, args.grover_n,
                              "search-space size for the amplitude-amplification schedule");
    auto* p = cmd->add_option(std::string("--probs") + suffix, args.probs,
                              "explicit success probabilities (comma separated)")
                  ->delimiter(',');
    auto* f = cmd->add_option(std::string("--schedule") + suffix, args.file,
                              "schedule file (JSON {\"probs\":[..]} or one-column CSV)");
    g->excludes(p)->excludes(f);
    p->excludes(f);
}

ProbabilitySchedule load_schedule(const ScheduleArgs& args) {
    if (args.grover_n > 0) return grover_schedule(args.grover_n);
    if (!args.probs.empty()) return custom_schedule(args.probs);
    if (!args.file.empty()) return io::schedule_from_file(args.file);
    throw std::invalid_argument("no schedule given: use --grover-N, --probs or --schedule");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + output_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
}

void emit_json(const json& j, const std::string& output_path) {
    emit(j.dump(2), output_path);
}

Variant parse_variant(const std::string& name) {
    if (name == "stingy") return Variant::kStingy;
    if (name == "quantum" || name == "tie-splitting") return Variant::kTieSplitting;
    throw std::invalid_argument("unknown game variant: " + name);
}

// Exit 1 under --strict when a precondition-gated report was inapplicable.
struct StrictGate {
    bool strict = false;
    bool tripped = false;
    void note(bool applicable) { tripped = tripped || !applicable; }
    int exit_code() const { return strict && tripped ? 1 : 0; }
};

int run(int argc, char** argv) {
    CLI::App app{"quantum race equilibrium toolkit"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("--output", output_path, "write output to this path instead of stdout");

    // --- schedule ---
    auto* schedule_cmd = app.add_subcommand("schedule", "construct and emit a schedule");
    ScheduleArgs schedule_args;
    add_schedule_flags(schedule_cmd, schedule_args);
    std::string schedule_format = "json";
    schedule_cmd->add_option("--format", schedule_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bool schedule_analytic_only = false;
    schedule_cmd->add_flag("--analytic-only", schedule_analytic_only,
                           "report K and the density parameter instead of failing "
                           "when K exceeds the materialization cap");

    // --- solve2 ---
    auto* solve2_cmd =
        app.add_subcommand("solve2", "coinciding equilibrium of a 2-player stingy race");
    ScheduleArgs solve2_args, solve2_col_args;
    add_schedule_flags(solve2_cmd, solve2_args);
    add_schedule_flags(solve2_cmd, solve2_col_args, "2");
    std::string solve2_format = "json";
    solve2_cmd->add_option("--format", solve2_format, "json only")
        ->check(CLI::IsMember({"json"}));

    // --- alternating ---
    auto* alt_cmd =
        app.add_subcommand("alternating", "alternating equilibrium of a symmetric race");
    ScheduleArgs alt_args;
    add_schedule_flags(alt_cmd, alt_args);

    // --- altcoinc ---
    auto* ac_cmd = app.add_subcommand(
        "altcoinc", "alternating-coinciding equilibria of a symmetric race");
    ScheduleArgs ac_args;
    add_schedule_flags(ac_cmd, ac_args);

    // --- solven ---
    auto* solven_cmd =
        app.add_subcommand("solven", "coinciding equilibrium of the n-player race");
    ScheduleArgs solven_args;
    add_schedule_flags(solven_cmd, solven_args);
    int solven_n = 2;
    solven_cmd->add_option("--n", solven_n, "number of players")->check(CLI::Range(2, 1000));

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "epsilon-Nash verdict for a profile");
    ScheduleArgs verify_args;
    add_schedule_flags(verify_cmd, verify_args);
    std::string verify_game = "stingy", verify_against, verify_profile_path;
    std::string verify_matrix_a, verify_matrix_b;
    double verify_tolerance = 1e-10;
    verify_cmd->add_option("--game", verify_game, "race variant the profile comes from")
        ->check(CLI::IsMember({"stingy", "quantum", "tie-splitting"}));
    verify_cmd->add_option("--against", verify_against,
                           "variant to verify against (defaults to --game)")
        ->check(CLI::IsMember({"stingy", "quantum", "tie-splitting"}));
    verify_cmd->add_option("--profile", verify_profile_path,
                           "profile JSON; defaults to the stingy coinciding equilibrium");
    verify_cmd->add_option("--matrix-a", verify_matrix_a, "row payoff matrix CSV");
    verify_cmd->add_option("--matrix-b", verify_matrix_b, "column payoff matrix CSV");
    verify_cmd->add_option("--tolerance", verify_tolerance, "exactness tolerance");

    // --- bound ---
    auto* bound_cmd =
        app.add_subcommand("bound", "density, convexity, payoff and tie bound suite");
    ScheduleArgs bound_args;
    add_schedule_flags(bound_cmd, bound_args);
    bool bound_strict = false;
    bound_cmd->add_flag("--strict", bound_strict,
                        "exit 1 when a precondition-gated check is inapplicable");

    // --- simulate ---
    auto* sim_cmd = app.add_subcommand("simulate", "seeded one-shot race simulation");
    ScheduleArgs sim_args;
    add_schedule_flags(sim_cmd, sim_args);
    int sim_n = 2;
    std::int64_t sim_trials = 100000;
    std::uint64_t sim_seed = 1;
    std::string sim_variant = "stingy", sim_profile_path;
    std::vector<double> sweep_n_items;
    std::vector<int> sweep_players;
    std::vector<double> sweep_difficulty;
    sim_cmd->add_option("--n", sim_n, "number of players")->check(CLI::Range(2, 1000));
    sim_cmd->add_option("--trials", sim_trials, "trial count");
    sim_cmd->add_option("--seed", sim_seed, "RNG seed (same seed, same result)");
    sim_cmd->add_option("--variant", sim_variant, "stingy or quantum")
        ->check(CLI::IsMember({"stingy", "quantum", "tie-splitting"}));
    sim_cmd->add_option("--profile", sim_profile_path,
                        "profile JSON; defaults to the coinciding equilibrium");
    sim_cmd->add_option("--sweep-N", sweep_n_items, "sweep mode: search-space sizes")
        ->delimiter(',');
    sim_cmd->add_option("--sweep-n", sweep_players, "sweep mode: player counts")
        ->delimiter(',');
    sim_cmd->add_option("--sweep-difficulty", sweep_difficulty,
                        "sweep mode: extra proof-of-work difficulties")
        ->delimiter(',');

    // --- bitcoin ---
    auto* btc_cmd =
        app.add_subcommand("bitcoin", "proof-of-work race parameters and bounds");
    double btc_difficulty = 0.0;
    std::vector<int> btc_players{2, 3, 5};
    btc_cmd->add_option("--difficulty", btc_difficulty, "network difficulty")->required();
    btc_cmd->add_option("--n", btc_players, "player counts for tie bounds")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (schedule_cmd->parsed()) {
        if (schedule_analytic_only && schedule_args.grover_n > 0) {
            const std::int64_t k =
                grover_strategy_count(static_cast<double>(schedule_args.grover_n));
            if (k > limits::max_materialized_k()) {
                emit_json(json{{"K", k},
                               {"ell", std::numbers::pi / 2.0},
                               {"materializable", false}},
                          output_path);
                return 0;
            }
        }
        const ProbabilitySchedule s = load_schedule(schedule_args);
        if (schedule_format == "csv") emit(io::schedule_to_csv(s), output_path);
        else emit_json(io::schedule_to_json(s), output_path);
        return 0;
    }

    if (solve2_cmd->parsed()) {
        const ProbabilitySchedule row = load_schedule(solve2_args);
        const bool asymmetric = solve2_col_args.grover_n > 0 ||
                                !solve2_col_args.probs.empty() ||
                                !solve2_col_args.file.empty();
        json j;
        if (asymmetric) {
            const ProbabilitySchedule col = load_schedule(solve2_col_args);
            const auto outcome = coinciding_equilibrium(row, col);
            if (std::holds_alternative<EquilibriumSolution>(outcome)) {
                j = io::solution_to_json(std::get<EquilibriumSolution>(outcome));
            } else {
                j = io::no_coinciding_to_json(std::get<NoCoincidingEquilibrium>(outcome));
            }
        } else {
            const EquilibriumSolution sol = coinciding_equilibrium(row);
            j = io::solution_to_json(sol);
            const CollisionAnalytics col = collision_analytics(sol, row);
            j["sigma"] = col.sigma;
            j["tieProbability"] = col.tie_probability;
            j["noWinnerProbability"] = col.no_winner_probability;
        }
        emit_json(j, output_path);
        return 0;
    }

    if (alt_cmd->parsed()) {
        const ProbabilitySchedule s = load_schedule(alt_args);
        const auto outcome = alternating_equilibrium(s);
        if (std::holds_alternative<EquilibriumSolution>(outcome)) {
            emit_json(io::solution_to_json(std::get<EquilibriumSolution>(outcome)),
                      output_path);
        } else {
            emit_json(io::no_alternating_to_json(std::get<NoAlternatingEquilibrium>(outcome)),
                      output_path);
        }
        return 0;
    }

    if (ac_cmd->parsed()) {
        const ProbabilitySchedule s = load_schedule(ac_args);
        json solutions = json::array();
        for (const auto& sol : alt_coinciding_equilibria(s)) {
            solutions.push_back(io::solution_to_json(sol));
        }
        emit_json(json{{"solutions", solutions}}, output_path);
        return 0;
    }

    if (solven_cmd->parsed()) {
        const ProbabilitySchedule s = load_schedule(solven_args);
        const DensityReport density = density_report(s);
        const MultiSolution sol = multi_coinciding_equilibrium(s, solven_n);
        json j = io::multi_solution_to_json(sol);
        const MultiTieReport ties = multi_tie_check(sol, s, density);
        j["totalTieProbability"] = ties.applicable ? json(ties.tie_probability) : json();
        const RegretReport regret = multi_approx_check(sol, s, density);
        j["worstRegret"] = regret.applicable ? json(regret.worst_regret) : json();
        j["bounds"] = {{"payoff", io::bounds_report_to_json(multi_bounds_check(sol, s, density))},
                       {"ties", io::tie_report_to_json(ties)},
                       {"regret", io::regret_report_to_json(regret)}};
        emit_json(j, output_path);
        return 0;
    }

    if (verify_cmd->parsed()) {
        NashVerdict verdict;
        if (!verify_matrix_a.empty() || !verify_matrix_b.empty()) {
            if (verify_matrix_a.empty() || verify_matrix_b.empty() ||
                verify_profile_path.empty()) {
                throw std::invalid_argument(
                    "matrix mode needs --matrix-a, --matrix-b and --profile");
            }
            const Matrix<double> ma = io::matrix_from_file(verify_matrix_a);
            const Matrix<double> mb = io::matrix_from_file(verify_matrix_b);
            if (ma.rows != ma.cols || mb.rows != mb.cols || ma.rows != mb.rows) {
                throw std::invalid_argument("matrices must be square and equally sized");
            }
            PayoffMatrix a(ma.rows, Variant::kStingy, Player::kRow);
            PayoffMatrix b(mb.rows, Variant::kStingy, Player::kColumn);
            for (int i = 1; i <= ma.rows; ++i) {
                for (int j = 1; j <= ma.cols; ++j) {
                    a.at(i, j) = ma.at(i, j);
                    b.at(i, j) = mb.at(i, j);
                }
            }
            const auto profile = io::profile_from_file(verify_profile_path);
            if (profile.size() != 2) throw std::invalid_argument("profile must have 2 players");
            verdict = verify_profile(a, b, profile[0], profile[1], verify_tolerance);
        } else {
            const ProbabilitySchedule s = load_schedule(verify_args);
            const Variant against =
                parse_variant(verify_against.empty() ? verify_game : verify_against);
            MixedStrategy x = MixedStrategy::uniform(s.size());
            MixedStrategy y = x;
            if (verify_profile_path.empty()) {
                const EquilibriumSolution sol = coinciding_equilibrium(s);
                x = sol.row;
                y = sol.col;
            } else {
                const auto profile = io::profile_from_file(verify_profile_path);
                if (profile.size() != 2) {
                    throw std::invalid_argument("profile must have 2 players");
                }
                x = profile[0];
                y = profile[1];
            }
            verdict = verify_race_profile(s, s, against, x, y, verify_tolerance);
        }
        emit_json(io::verdict_to_json(verdict), output_path);
        return 0;
    }

    if (bound_cmd->parsed()) {
        StrictGate gate{bound_strict};
        const ProbabilitySchedule s = load_schedule(bound_args);
        const DensityReport density = density_report(s);
        const EquilibriumSolution sol = coinciding_equilibrium(s);
        const BoundsReport payoff = payoff_bounds_check(sol, s, density);
        const BoundsReport ties = collision_bounds_check(sol, s, density);
        const PayoffCeilingReport ceiling = payoff_ceiling(s, density);
        const StartRelations relations = tstar_relations_check(s);
        gate.note(payoff.applicable);
        gate.note(ties.applicable);
        gate.note(ceiling.applicable);
        json j{{"K", s.size()},
               {"density", io::density_to_json(density)},
               {"convexity", io::convexity_to_json(convexity_report(s))},
               {"Tstar", sol.start_t},
               {"payoff", sol.payoff_row},
               {"payoffBounds", io::bounds_report_to_json(payoff)},
               {"collision", io::collision_to_json(collision_analytics(sol, s))},
               {"collisionBounds", io::bounds_report_to_json(ties)},
               {"ceiling", io::ceiling_to_json(ceiling)},
               {"startRelations",
                {{"convex", relations.convex},
                 {"Tstar", relations.t_star},
                 {"TstarAlternating", relations.t_star_alternating},
                 {"parityRelationHolds", relations.parity_relation_holds},
                 {"generalBoundHolds", relations.general_bound_holds}}}};
        emit_json(j, output_path);
        return gate.exit_code();
    }

    if (sim_cmd->parsed()) {
        if (!sweep_n_items.empty() || !sweep_difficulty.empty()) {
            std::vector<double> n_items = sweep_n_items;
            for (double d : sweep_difficulty) n_items.push_back(4294967296.0 * d);
            const std::vector<int> players =
                sweep_players.empty() ? std::vector<int>{2, 3, 5} : sweep_players;
            const auto rows = fork_rate_sweep(n_items, players, sim_trials, sim_seed);
            emit(io::sweep_to_csv(rows), output_path);
            return 0;
        }
        const ProbabilitySchedule s = load_schedule(sim_args);
        RaceConfig cfg(sim_n, s, parse_variant(sim_variant));
        std::vector<MixedStrategy> profile;
        if (sim_profile_path.empty()) {
            const MultiSolution sol = multi_coinciding_equilibrium(s, sim_n);
            profile.assign(static_cast<std::size_t>(sim_n), sol.strategy);
        } else {
            profile = io::profile_from_file(sim_profile_path);
            if (static_cast<int>(profile.size()) != sim_n) {
                throw std::invalid_argument("profile length must equal --n");
            }
        }
        const SimResult result = run_simulation({sim_trials, sim_seed, cfg, profile});
        emit_json(io::sim_result_to_json(result), output_path);
        return 0;
    }

    if (btc_cmd->parsed()) {
        const BitcoinParams params = bitcoin_schedule_params(btc_difficulty);
        json j = io::bitcoin_to_json(params);
        json per_n = json::array();
        for (int n : btc_players) {
            per_n.push_back(
                {{"n", n},
                 {"tieBound",
                  bounds::total_tie_bound(n, params.ell,
                                          static_cast<double>(params.strategy_count))}});
        }
        j["tieBounds"] = per_n;
        emit_json(j, output_path);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
