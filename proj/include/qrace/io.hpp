#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qrace/appendix.hpp"
#include "qrace/dual.hpp"
#include "qrace/multiplayer.hpp"
#include "qrace/payoff.hpp"
#include "qrace/schedule.hpp"
#include "qrace/sim.hpp"
#include "qrace/solve2.hpp"
#include "qrace/verify.hpp"

namespace qrace::io {

// 17 significant digits: enough to round-trip any double through text.
std::string format_double(double v);

nlohmann::json schedule_to_json(const ProbabilitySchedule& s);
ProbabilitySchedule schedule_from_json(const nlohmann::json& j);

std::string schedule_to_csv(const ProbabilitySchedule& s);   // one value per line
ProbabilitySchedule schedule_from_csv(const std::string& text);

// Sniffs JSON against CSV and parses either.
ProbabilitySchedule schedule_from_text(const std::string& text);
ProbabilitySchedule schedule_from_file(const std::string& path);

std::string matrix_to_csv(const PayoffMatrix& m);            // row-major
Matrix<double> matrix_from_csv(const std::string& text);
Matrix<double> matrix_from_file(const std::string& path);

nlohmann::json profile_to_json(const std::vector<MixedStrategy>& profile);
std::vector<MixedStrategy> profile_from_json(const nlohmann::json& j);
std::vector<MixedStrategy> profile_from_file(const std::string& path);

nlohmann::json solution_to_json(const EquilibriumSolution& sol);
nlohmann::json no_coinciding_to_json(const NoCoincidingEquilibrium& verdict);
nlohmann::json no_alternating_to_json(const NoAlternatingEquilibrium& verdict);
nlohmann::json bounds_report_to_json(const BoundsReport& report);
nlohmann::json collision_to_json(const CollisionAnalytics& analytics);
nlohmann::json verdict_to_json(const NashVerdict& verdict);
nlohmann::json multi_solution_to_json(const MultiSolution& sol);
nlohmann::json tie_report_to_json(const MultiTieReport& report);
nlohmann::json regret_report_to_json(const RegretReport& report);
nlohmann::json certificate_to_json(const DualCertificate& cert);
nlohmann::json ceiling_to_json(const PayoffCeilingReport& report);
nlohmann::json sim_result_to_json(const SimResult& result);
nlohmann::json bitcoin_to_json(const BitcoinParams& params);
nlohmann::json density_to_json(const DensityReport& density);
nlohmann::json convexity_to_json(const ConvexityReport& convexity);

inline constexpr const char* kSweepHeader =
    "N,K,n,ell,Tstar,analytic_payoff,analytic_tie,empirical_tie,"
    "bound_8enl_over_K,trials,seed";

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace qrace::io
