#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "qrace/appendix.hpp"
#include "qrace/constants.hpp"
#include "qrace/dual.hpp"
#include "qrace/io.hpp"
#include "qrace/multiplayer.hpp"
#include "qrace/payoff.hpp"
#include "qrace/schedule.hpp"
#include "qrace/sim.hpp"
#include "qrace/solve2.hpp"
#include "qrace/verify.hpp"

namespace py = pybind11;
using namespace qrace;

namespace {

// variant-returning solvers surface as (solution | verdict) objects
py::object coinciding_2p(const ProbabilitySchedule& row, const ProbabilitySchedule& col) {
    auto outcome = coinciding_equilibrium(row, col);
    if (std::holds_alternative<EquilibriumSolution>(outcome)) {
        return py::cast(std::get<EquilibriumSolution>(std::move(outcome)));
    }
    return py::cast(std::get<NoCoincidingEquilibrium>(std::move(outcome)));
}

py::object alternating(const ProbabilitySchedule& s) {
    auto outcome = alternating_equilibrium(s);
    if (std::holds_alternative<EquilibriumSolution>(outcome)) {
        return py::cast(std::get<EquilibriumSolution>(std::move(outcome)));
    }
    return py::cast(std::get<NoAlternatingEquilibrium>(std::move(outcome)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Closed-form equilibria, bounds and simulation for quantum races";

    py::enum_<Variant>(m, "Variant")
        .value("STINGY", Variant::kStingy)
        .value("TIE_SPLITTING", Variant::kTieSplitting);

    py::enum_<Player>(m, "Player")
        .value("ROW", Player::kRow)
        .value("COLUMN", Player::kColumn);

    py::enum_<EquilibriumKind>(m, "EquilibriumKind")
        .value("COINCIDING", EquilibriumKind::kCoinciding)
        .value("ALTERNATING", EquilibriumKind::kAlternating)
        .value("ALTERNATING_COINCIDING", EquilibriumKind::kAlternatingCoinciding);

    py::class_<ProbabilitySchedule>(m, "ProbabilitySchedule")
        .def(py::init<std::vector<double>>())
        .def_property_readonly("probs", &ProbabilitySchedule::probs)
        .def("p", &ProbabilitySchedule::p, py::arg("t"))
        .def("__len__", &ProbabilitySchedule::size)
        .def("__eq__", [](const ProbabilitySchedule& a, const ProbabilitySchedule& b) {
            return a == b;
        });

    py::class_<MixedStrategy>(m, "MixedStrategy")
        .def(py::init<std::vector<double>>())
        .def_static("pure", &MixedStrategy::pure, py::arg("t"), py::arg("k"))
        .def_static("uniform", &MixedStrategy::uniform, py::arg("k"))
        .def_property_readonly("weights", &MixedStrategy::weights)
        .def_property_readonly("support", &MixedStrategy::support)
        .def("weight", &MixedStrategy::weight, py::arg("t"))
        .def("__len__", &MixedStrategy::size);

    py::class_<DensityReport>(m, "DensityReport")
        .def_readonly("ell", &DensityReport::ell)
        .def_readonly("ratio", &DensityReport::ratio)
        .def("is_dense_for", &DensityReport::is_dense_for);

    py::class_<ConvexityReport>(m, "ConvexityReport")
        .def_readonly("is_convex", &ConvexityReport::is_convex)
        .def_readonly("worst_violation", &ConvexityReport::worst_violation);

    py::class_<BitcoinParams>(m, "BitcoinParams")
        .def_readonly("difficulty", &BitcoinParams::difficulty)
        .def_readonly("expected_hashes", &BitcoinParams::expected_hashes)
        .def_readonly("strategy_count", &BitcoinParams::strategy_count)
        .def_readonly("ell", &BitcoinParams::ell)
        .def_readonly("epsilon_two_player", &BitcoinParams::epsilon_two_player)
        .def_readonly("epsilon_multiplayer", &BitcoinParams::epsilon_multiplayer)
        .def_readonly("materializable", &BitcoinParams::materializable);

    py::class_<PayoffMatrix>(m, "PayoffMatrix")
        .def("at", py::overload_cast<int, int>(&PayoffMatrix::at, py::const_))
        .def_property_readonly("entries", &PayoffMatrix::entries)
        .def("__len__", &PayoffMatrix::size);

    py::class_<RaceConfig>(m, "RaceConfig")
        .def(py::init<int, ProbabilitySchedule, Variant>(), py::arg("n"),
             py::arg("schedule"), py::arg("variant") = Variant::kStingy)
        .def(py::init<ProbabilitySchedule, ProbabilitySchedule, Variant>(),
             py::arg("row"), py::arg("col"), py::arg("variant") = Variant::kStingy)
        .def_readonly("players", &RaceConfig::players)
        .def_readonly("variant", &RaceConfig::variant);

    py::class_<TieProfile>(m, "TieProfile")
        .def_readonly("by_multiplicity", &TieProfile::by_multiplicity)
        .def_readonly("total", &TieProfile::total)
        .def("shared", &TieProfile::shared);

    py::class_<CoincidingInternals>(m, "CoincidingInternals")
        .def_readonly("q_row", &CoincidingInternals::q_row)
        .def_readonly("r_row", &CoincidingInternals::r_row)
        .def_readonly("z_row", &CoincidingInternals::z_row)
        .def_readonly("q_col", &CoincidingInternals::q_col)
        .def_readonly("r_col", &CoincidingInternals::r_col)
        .def_readonly("z_col", &CoincidingInternals::z_col)
        .def_readonly("t_star_row", &CoincidingInternals::t_star_row)
        .def_readonly("t_star_col", &CoincidingInternals::t_star_col)
        .def_readonly("marginal_row", &CoincidingInternals::marginal_row)
        .def_readonly("marginal_col", &CoincidingInternals::marginal_col);

    py::class_<EquilibriumSolution>(m, "EquilibriumSolution")
        .def_readonly("kind", &EquilibriumSolution::kind)
        .def_readonly("start_t", &EquilibriumSolution::start_t)
        .def_readonly("change_c", &EquilibriumSolution::change_c)
        .def_readonly("row", &EquilibriumSolution::row)
        .def_readonly("col", &EquilibriumSolution::col)
        .def_readonly("payoff_row", &EquilibriumSolution::payoff_row)
        .def_readonly("payoff_col", &EquilibriumSolution::payoff_col)
        .def_readonly("swap_also_equilibrium", &EquilibriumSolution::swap_also_equilibrium)
        .def("to_json", [](const EquilibriumSolution& sol) {
            return io::solution_to_json(sol).dump();
        });

    py::class_<NoCoincidingEquilibrium>(m, "NoCoincidingEquilibrium")
        .def_readonly("t_star_row", &NoCoincidingEquilibrium::t_star_row)
        .def_readonly("t_star_col", &NoCoincidingEquilibrium::t_star_col)
        .def_readonly("candidate_row", &NoCoincidingEquilibrium::candidate_row)
        .def_readonly("candidate_col", &NoCoincidingEquilibrium::candidate_col);

    py::class_<NoAlternatingEquilibrium>(m, "NoAlternatingEquilibrium")
        .def_readonly("reason", &NoAlternatingEquilibrium::reason);

    py::class_<CollisionAnalytics>(m, "CollisionAnalytics")
        .def_readonly("sigma", &CollisionAnalytics::sigma)
        .def_readonly("tie_probability", &CollisionAnalytics::tie_probability)
        .def_readonly("no_winner_probability", &CollisionAnalytics::no_winner_probability);

    py::class_<BoundCheck>(m, "BoundCheck")
        .def_readonly("name", &BoundCheck::name)
        .def_readonly("lhs", &BoundCheck::lhs)
        .def_readonly("rhs", &BoundCheck::rhs)
        .def_readonly("holds", &BoundCheck::holds);

    py::class_<BoundsReport>(m, "BoundsReport")
        .def_readonly("applicable", &BoundsReport::applicable)
        .def_readonly("reason", &BoundsReport::reason)
        .def_readonly("checks", &BoundsReport::checks)
        .def("all_hold", &BoundsReport::all_hold);

    py::class_<MultiInternals>(m, "MultiInternals")
        .def_readonly("reduced", &MultiInternals::reduced)
        .def_readonly("q", &MultiInternals::q)
        .def_readonly("r", &MultiInternals::r)
        .def_readonly("z", &MultiInternals::z)
        .def_readonly("t_star", &MultiInternals::t_star);

    py::class_<MultiSolution>(m, "MultiSolution")
        .def_readonly("n", &MultiSolution::n)
        .def_readonly("internals", &MultiSolution::internals)
        .def_readonly("strategy", &MultiSolution::strategy)
        .def_readonly("per_player_payoff", &MultiSolution::per_player_payoff);

    py::class_<MultiTieReport>(m, "MultiTieReport")
        .def_readonly("applicable", &MultiTieReport::applicable)
        .def_readonly("sum_cp", &MultiTieReport::sum_cp)
        .def_readonly("tie_probability", &MultiTieReport::tie_probability)
        .def_readonly("bound_total", &MultiTieReport::bound_total)
        .def_readonly("bound_per_player", &MultiTieReport::bound_per_player)
        .def_readonly("worst_deviation_cp", &MultiTieReport::worst_deviation_cp)
        .def_readonly("total_holds", &MultiTieReport::total_holds)
        .def_readonly("per_deviation_holds", &MultiTieReport::per_deviation_holds);

    py::class_<RegretReport>(m, "RegretReport")
        .def_readonly("applicable", &RegretReport::applicable)
        .def_readonly("worst_regret", &RegretReport::worst_regret)
        .def_readonly("worst_deviation", &RegretReport::worst_deviation)
        .def_readonly("bound", &RegretReport::bound)
        .def_readonly("bound_two_player", &RegretReport::bound_two_player)
        .def_readonly("holds", &RegretReport::holds);

    py::class_<BestResponseSet>(m, "BestResponseSet")
        .def_readonly("responses", &BestResponseSet::responses)
        .def_readonly("payoffs", &BestResponseSet::payoffs)
        .def_readonly("best", &BestResponseSet::best);

    py::class_<DeviationInfo>(m, "DeviationInfo")
        .def_readonly("player", &DeviationInfo::player)
        .def_readonly("best_response", &DeviationInfo::best_response)
        .def_readonly("gain", &DeviationInfo::gain);

    py::class_<NashVerdict>(m, "NashVerdict")
        .def_readonly("is_exact", &NashVerdict::is_exact)
        .def_readonly("epsilon_approx", &NashVerdict::epsilon_approx)
        .def_readonly("epsilon_well_supported", &NashVerdict::epsilon_well_supported)
        .def_readonly("tolerance", &NashVerdict::tolerance)
        .def_readonly("worst_deviations", &NashVerdict::worst_deviations);

    py::class_<EnumeratedEquilibrium<double>>(m, "EnumeratedEquilibrium")
        .def_readonly("x", &EnumeratedEquilibrium<double>::x)
        .def_readonly("y", &EnumeratedEquilibrium<double>::y)
        .def_readonly("payoff_row", &EnumeratedEquilibrium<double>::payoff_row)
        .def_readonly("payoff_col", &EnumeratedEquilibrium<double>::payoff_col)
        .def_readonly("degenerate", &EnumeratedEquilibrium<double>::degenerate);

    py::class_<DualCertificate>(m, "DualCertificate")
        .def_readonly("c", &DualCertificate::c)
        .def_readonly("S", &DualCertificate::s)
        .def_readonly("lam", &DualCertificate::lambda)
        .def_readonly("d", &DualCertificate::d)
        .def_readonly("v", &DualCertificate::v)
        .def_readonly("beta", &DualCertificate::beta)
        .def_readonly("objective", &DualCertificate::objective)
        .def_readonly("feasible", &DualCertificate::feasible)
        .def_readonly("trivial", &DualCertificate::trivial);

    py::class_<PayoffCeilingReport>(m, "PayoffCeilingReport")
        .def_readonly("applicable", &PayoffCeilingReport::applicable)
        .def_readonly("ceiling", &PayoffCeilingReport::ceiling)
        .def_readonly("certificate", &PayoffCeilingReport::certificate);

    py::class_<StartRelations>(m, "StartRelations")
        .def_readonly("convex", &StartRelations::convex)
        .def_readonly("t_star", &StartRelations::t_star)
        .def_readonly("t_star_alternating", &StartRelations::t_star_alternating)
        .def_readonly("parity_relation_holds", &StartRelations::parity_relation_holds)
        .def_readonly("general_bound_holds", &StartRelations::general_bound_holds);

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("trials", &SimResult::trials)
        .def_readonly("seed", &SimResult::seed)
        .def_readonly("win_counts", &SimResult::win_counts)
        .def_readonly("tie_counts", &SimResult::tie_counts)
        .def_readonly("no_winner_count", &SimResult::no_winner_count)
        .def("win_frequency", &SimResult::win_frequency)
        .def("tie_frequency", py::overload_cast<>(&SimResult::tie_frequency, py::const_))
        .def("tie_frequency_m", py::overload_cast<int>(&SimResult::tie_frequency, py::const_))
        .def("no_winner_frequency", &SimResult::no_winner_frequency)
        .def("payoff_estimate", &SimResult::payoff_estimate)
        .def("payoff_standard_error", &SimResult::payoff_standard_error);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n_items", &SweepRow::n_items)
        .def_readonly("k", &SweepRow::k)
        .def_readonly("players", &SweepRow::players)
        .def_readonly("ell", &SweepRow::ell)
        .def_readonly("t_star", &SweepRow::t_star)
        .def_readonly("analytic_payoff", &SweepRow::analytic_payoff)
        .def_readonly("analytic_tie", &SweepRow::analytic_tie)
        .def_readonly("empirical_tie", &SweepRow::empirical_tie)
        .def_readonly("tie_bound", &SweepRow::tie_bound)
        .def_readonly("analytic_only", &SweepRow::analytic_only);

    m.def("grover_schedule", &grover_schedule, py::arg("n_items"));
    m.def("grover_success_probability", &grover_success_probability, py::arg("n_items"),
          py::arg("t"));
    m.def("grover_strategy_count", &grover_strategy_count, py::arg("n_items"));
    m.def("custom_schedule", &custom_schedule, py::arg("values"));
    m.def("density_report", &density_report);
    m.def("convexity_report", &convexity_report);
    m.def("bitcoin_schedule_params", &bitcoin_schedule_params, py::arg("difficulty"));

    m.def("payoff_matrix_2p", &payoff_matrix_2p, py::arg("row"), py::arg("col"),
          py::arg("variant"), py::arg("player"));
    m.def("expected_payoff_2p", &expected_payoff_2p);
    m.def("utility_np_pure", &utility_np_pure);
    m.def("utility_np_mixed", &utility_np_mixed);
    m.def("utility_np_stingy", &utility_np_stingy);
    m.def("utility_np_quantum", &utility_np_quantum);
    m.def("tie_profile", &tie_profile);

    m.def("coinciding_internals", &coinciding_internals);
    m.def("coinciding_equilibrium",
          py::overload_cast<const ProbabilitySchedule&>(&coinciding_equilibrium),
          "coinciding equilibrium of a symmetric stingy race");
    m.def("coinciding_equilibrium_2p", &coinciding_2p, py::arg("row"), py::arg("col"));
    m.def("collision_analytics", &collision_analytics);
    m.def("payoff_bounds_check", &payoff_bounds_check);
    m.def("collision_bounds_check", &collision_bounds_check);

    m.def("alternating_equilibrium", &alternating, py::arg("schedule"));
    m.def("alt_coinciding_equilibria", &alt_coinciding_equilibria);
    m.def("tstar_relations_check", &tstar_relations_check);

    m.def("reduced_game", &reduced_game);
    m.def("multi_coinciding_equilibrium", &multi_coinciding_equilibrium, py::arg("schedule"),
          py::arg("n"));
    m.def("multi_bounds_check", &multi_bounds_check);
    m.def("multi_tie_check", &multi_tie_check);
    m.def("multi_approx_check", &multi_approx_check);

    m.def("best_response_set", &best_response_set);
    m.def("verify_profile", &verify_profile, py::arg("a"), py::arg("b"), py::arg("x"),
          py::arg("y"), py::arg("tolerance") = 1e-10);
    m.def("verify_race_profile", &verify_race_profile, py::arg("row"), py::arg("col"),
          py::arg("variant"), py::arg("x"), py::arg("y"), py::arg("tolerance") = 1e-10);
    m.def("verify_profile_np", &verify_profile_np, py::arg("config"), py::arg("profile"),
          py::arg("tolerance") = 1e-10);
    m.def("support_enumeration_2p", &support_enumeration_2p);

    m.def("dual_beta", &dual_beta);
    m.def("dual_certificate", &dual_certificate, py::arg("schedule"), py::arg("c"));
    m.def("payoff_ceiling", &payoff_ceiling);

    m.def(
        "run_simulation",
        [](const RaceConfig& cfg, const std::vector<MixedStrategy>& profile,
           std::int64_t trials, std::uint64_t seed) {
            return run_simulation({trials, seed, cfg, profile});
        },
        py::arg("config"), py::arg("profile"), py::arg("trials"), py::arg("seed"));
    m.def("fork_rate_sweep", &fork_rate_sweep, py::arg("n_items"), py::arg("player_counts"),
          py::arg("trials"), py::arg("seed"));

    m.attr("PAYOFF_CAP") = bounds::kPayoffCap;
}
