#include "qrace/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qrace::io {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json schedule_to_json(const ProbabilitySchedule& s) {
    return json{{"probs", s.probs()}};
}

ProbabilitySchedule schedule_from_json(const json& j) {
    if (!j.contains("probs")) throw std::invalid_argument("schedule JSON must carry \"probs\"");
    return ProbabilitySchedule(j.at("probs").get<std::vector<double>>());
}

std::string schedule_to_csv(const ProbabilitySchedule& s) {
    std::string out;
    for (double p : s.probs()) {
        out += format_double(p);
        out += '\n';
    }
    return out;
}

ProbabilitySchedule schedule_from_csv(const std::string& text) {
    std::vector<double> probs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        probs.push_back(std::stod(line));
    }
    return ProbabilitySchedule(std::move(probs));
}

ProbabilitySchedule schedule_from_text(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
        if (c == '{') return schedule_from_json(json::parse(text));
        break;
    }
    return schedule_from_csv(text);
}

ProbabilitySchedule schedule_from_file(const std::string& path) {
    return schedule_from_text(read_file(path));
}

std::string matrix_to_csv(const PayoffMatrix& m) {
    std::string out;
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) {
            if (j > 1) out += ',';
            out += format_double(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

Matrix<double> matrix_from_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    Matrix<double> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.at(static_cast<int>(i + 1), static_cast<int>(j + 1)) = rows[i][j];
        }
    }
    return m;
}

Matrix<double> matrix_from_file(const std::string& path) {
    return matrix_from_csv(read_file(path));
}

json profile_to_json(const std::vector<MixedStrategy>& profile) {
    json players = json::array();
    for (const MixedStrategy& x : profile) players.push_back({{"weights", x.weights()}});
    return json{{"players", players}};
}

std::vector<MixedStrategy> profile_from_json(const json& j) {
    std::vector<MixedStrategy> out;
    for (const auto& p : j.at("players")) {
        out.emplace_back(p.at("weights").get<std::vector<double>>());
    }
    return out;
}

std::vector<MixedStrategy> profile_from_file(const std::string& path) {
    return profile_from_json(json::parse(read_file(path)));
}

json solution_to_json(const EquilibriumSolution& sol) {
    return json{{"kind", to_string(sol.kind)},
                {"startT", sol.start_t},
                {"changeC", sol.change_c},
                {"Tstar", sol.start_t},
                {"row", sol.row.weights()},
                {"col", sol.col.weights()},
                {"payoffRow", sol.payoff_row},
                {"payoffCol", sol.payoff_col},
                {"swapAlsoEquilibrium", sol.swap_also_equilibrium}};
}

json no_coinciding_to_json(const NoCoincidingEquilibrium& verdict) {
    return json{{"kind", "none"},
                {"TstarRow", verdict.t_star_row},
                {"TstarCol", verdict.t_star_col},
                {"candidateRow", verdict.candidate_row.weights()},
                {"candidateCol", verdict.candidate_col.weights()}};
}

json no_alternating_to_json(const NoAlternatingEquilibrium& verdict) {
    return json{{"kind", "none"},
                {"TstarTilde", verdict.internals.t_star},
                {"reason", verdict.reason},
                {"endWeightPositive", verdict.internals.end_weight_positive},
                {"topDeviationOk", verdict.internals.top_deviation_ok},
                {"lowDeviationOk", verdict.internals.low_deviation_ok}};
}

json bounds_report_to_json(const BoundsReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"holds", c.holds}});
    }
    return json{{"applicable", report.applicable},
                {"reason", report.reason},
                {"checks", checks},
                {"allHold", report.all_hold()}};
}

json collision_to_json(const CollisionAnalytics& analytics) {
    return json{{"sigma", analytics.sigma},
                {"tieProbability", analytics.tie_probability},
                {"noWinnerProbability", analytics.no_winner_probability}};
}

json verdict_to_json(const NashVerdict& verdict) {
    json devs = json::array();
    for (const auto& d : verdict.worst_deviations) {
        devs.push_back({{"player", d.player},
                        {"bestResponse", d.best_response},
                        {"gain", d.gain}});
    }
    return json{{"isExact", verdict.is_exact},
                {"epsilonApprox", verdict.epsilon_approx},
                {"epsilonWellSupported", verdict.epsilon_well_supported},
                {"tolerance", verdict.tolerance},
                {"worstDeviations", devs}};
}

json multi_solution_to_json(const MultiSolution& sol) {
    return json{{"n", sol.n},
                {"Tstar", sol.internals.t_star},
                {"strategy", sol.strategy.weights()},
                {"perPlayerPayoff", sol.per_player_payoff}};
}

json tie_report_to_json(const MultiTieReport& report) {
    return json{{"applicable", report.applicable},
                {"reason", report.reason},
                {"sumCp", report.sum_cp},
                {"tieProbability", report.tie_probability},
                {"boundTotal", report.bound_total},
                {"boundPerPlayer", report.bound_per_player},
                {"worstDeviationCp", report.worst_deviation_cp},
                {"totalHolds", report.total_holds},
                {"perDeviationHolds", report.per_deviation_holds}};
}

json regret_report_to_json(const RegretReport& report) {
    json j{{"applicable", report.applicable},
           {"reason", report.reason},
           {"worstRegret", report.worst_regret},
           {"worstDeviation", report.worst_deviation},
           {"bound", report.bound},
           {"holds", report.holds}};
    if (!std::isnan(report.bound_two_player)) {
        j["boundTwoPlayer"] = report.bound_two_player;
    }
    return j;
}

json certificate_to_json(const DualCertificate& cert) {
    return json{{"c", cert.c},
                {"S", cert.s},
                {"lambda", cert.lambda},
                {"d", cert.d},
                {"v", cert.v},
                {"beta", cert.beta},
                {"objective", cert.objective},
                {"feasible", cert.feasible},
                {"trivial", cert.trivial},
                {"worstSlack", cert.worst_slack}};
}

json ceiling_to_json(const PayoffCeilingReport& report) {
    json j{{"applicable", report.applicable}, {"reason", report.reason}};
    if (report.applicable) {
        j["ceiling"] = report.ceiling;
        j["certificate"] = certificate_to_json(report.certificate);
    }
    return j;
}

json sim_result_to_json(const SimResult& result) {
    const int n = static_cast<int>(result.win_counts.size());
    json wins = json::array();
    json payoffs = json::array();
    for (int i = 0; i < n; ++i) {
        wins.push_back(result.win_frequency(i));
        payoffs.push_back({{"estimate", result.payoff_estimate(i)},
                           {"standardError", result.payoff_standard_error(i)}});
    }
    json ties = json::array();
    for (int m = 2; m <= n; ++m) {
        ties.push_back({{"multiplicity", m}, {"frequency", result.tie_frequency(m)}});
    }
    return json{{"trials", result.trials},
                {"seed", result.seed},
                {"winFrequency", wins},
                {"tieFrequency", result.tie_frequency()},
                {"tieByMultiplicity", ties},
                {"noWinnerFrequency", result.no_winner_frequency()},
                {"payoffEstimate", payoffs}};
}

json bitcoin_to_json(const BitcoinParams& params) {
    return json{{"difficulty", params.difficulty},
                {"expectedHashes", params.expected_hashes},
                {"K", params.strategy_count},
                {"ell", params.ell},
                {"epsilonTwoPlayer", params.epsilon_two_player},
                {"epsilonMultiplayer", params.epsilon_multiplayer},
                {"materializable", params.materializable}};
}

json density_to_json(const DensityReport& density) {
    return json{{"ell", density.ell}, {"ratio", density.ratio}};
}

json convexity_to_json(const ConvexityReport& convexity) {
    return json{{"isConvex", convexity.is_convex},
                {"worstViolation", convexity.worst_violation}};
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepHeader;
    out += '\n';
    for (const SweepRow& r : rows) {
        out += format_double(r.n_items);
        out += ',' + std::to_string(r.k);
        out += ',' + std::to_string(r.players);
        out += ',' + format_double(r.ell);
        if (r.analytic_only) {
            out += ",,,,";  // Tstar, payoff, analytic tie, empirical tie unavailable
        } else {
            out += ',' + std::to_string(r.t_star);
            out += ',' + format_double(r.analytic_payoff);
            out += ',' + format_double(r.analytic_tie);
            out += ',' + format_double(r.empirical_tie);
        }
        out += ',' + format_double(r.tie_bound);
        out += ',' + std::to_string(r.trials);
        out += ',' + std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

}  // namespace qrace::io
