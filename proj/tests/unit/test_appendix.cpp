#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "qrace/appendix.hpp"
#include "qrace/rational.hpp"
#include "qrace/verify.hpp"
#include "test_helpers.hpp"

using namespace qrace;

TEST_CASE("parity interval combinatorics") {
    CHECK(parity_interval(3, 9) == std::vector<int>{3, 5, 7, 9});
    CHECK(parity_interval(3, 10) == std::vector<int>{3, 5, 7, 9});
    CHECK(parity_interval(4, 4) == std::vector<int>{4});
    CHECK(parity_interval(5, 4).empty());
    for (int k = 2; k <= 12; ++k) {
        for (int t = 1; t <= k; ++t) {
            const auto d = parity_interval(t, k);
            CHECK(static_cast<int>(d.size()) == (k - t) / 2 + 1);
            for (int v : d) CHECK((v - t) % 2 == 0);
        }
    }
}

TEST_CASE("alternating equilibrium of the (0.3, 0.6) race is the pure pair") {
    const ProbabilitySchedule s = custom_schedule({0.3, 0.6});
    const AlternatingInternals in = alternating_internals(s);
    CHECK(in.t_star == 1);
    CHECK(in.r[1] == doctest::Approx(1.0 / 0.42).epsilon(1e-13));
    CHECK(in.r_end[1] == doctest::Approx(1.0 / 0.3).epsilon(1e-13));
    CHECK(in.exists);
    const auto outcome = alternating_equilibrium(s);
    REQUIRE(std::holds_alternative<EquilibriumSolution>(outcome));
    const auto& sol = std::get<EquilibriumSolution>(outcome);
    CHECK(sol.row.weight(1) == 1.0);
    CHECK(sol.col.weight(2) == 1.0);
    CHECK(sol.payoff_row == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(sol.payoff_col == doctest::Approx(0.42).epsilon(1e-13));
    CHECK(verify_race_profile(s, s, Variant::kStingy, sol.row, sol.col).is_exact);
}

TEST_CASE("alternating existence conditions can fail") {
    // The late player's weight at K must be positive and neither player may
    // profit from the deviations the conditions guard; random rational
    // schedules exercise refusals of both kinds.
    std::mt19937_64 rng(41);
    int refused = 0;
    for (int trial = 0; trial < 300 && refused < 8; ++trial) {
        const auto probs = testing::random_rational_schedule(rng, 3 + int(rng() % 2));
        const auto core = closed_form::alternating_core(probs);
        if (core.exists) continue;
        ++refused;
        const ProbabilitySchedule s{testing::to_doubles(probs)};
        const auto outcome = alternating_equilibrium(s);
        CHECK(std::holds_alternative<NoAlternatingEquilibrium>(outcome));
        // the refusal is genuine: exhaustive enumeration finds no
        // alternating-shaped equilibrium either
        const auto [a0, b0] = stingy_matrices(probs);
        for (const auto& eq : support_enumeration(a0, b0)) {
            std::vector<int> sx, sy;
            for (int t = 1; t <= s.size(); ++t) {
                if (eq.x[t - 1] > 0) sx.push_back(t);
                if (eq.y[t - 1] > 0) sy.push_back(t);
            }
            CHECK(classify_support_shape(sx, sy, s.size()) != SupportShape::kAlternating);
        }
    }
    CHECK(refused == 8);
}

TEST_CASE("alternating solutions verify as exact equilibria") {
    std::mt19937_64 rng(42);
    int found = 0;
    for (int trial = 0; trial < 120 && found < 15; ++trial) {
        const int k = 2 + int(rng() % 5);
        const ProbabilitySchedule s = testing::random_schedule(rng, k);
        const auto outcome = alternating_equilibrium(s);
        if (!std::holds_alternative<EquilibriumSolution>(outcome)) continue;
        ++found;
        const auto& sol = std::get<EquilibriumSolution>(outcome);
        const auto verdict = verify_race_profile(s, s, Variant::kStingy, sol.row, sol.col);
        CHECK(verdict.epsilon_well_supported <= 1e-10);
        // swapped roles form an equilibrium of the symmetric game too
        CHECK(sol.swap_also_equilibrium);
        const auto swapped = verify_race_profile(s, s, Variant::kStingy, sol.col, sol.row);
        CHECK(swapped.epsilon_well_supported <= 1e-10);
        // supports interleave
        CHECK((k - sol.start_t) % 2 == 1);
        CHECK(sol.row.support() == parity_interval(sol.start_t, k));
        CHECK(sol.col.support() == parity_interval(sol.start_t + 1, k));
    }
    CHECK(found == 15);
}

TEST_CASE("alternating-coinciding solutions verify and keep one c per start") {
    std::mt19937_64 rng(43);
    int found = 0;
    for (int trial = 0; trial < 4000 && found < 10; ++trial) {
        const int k = 3 + int(rng() % 2);
        const ProbabilitySchedule s = testing::random_schedule(rng, k);
        const auto scan = alt_coinciding_scan(s);
        if (scan.solutions.empty()) continue;
        found += static_cast<int>(scan.solutions.size());
        std::set<int> starts;
        for (const auto& sol : scan.solutions) {
            CHECK(starts.insert(sol.start_t).second);  // at most one c per start
            CHECK(sol.change_c > sol.start_t);
            CHECK(sol.change_c <= k);
            CHECK((sol.change_c - sol.start_t) % 2 == 0);
            const auto verdict =
                verify_race_profile(s, s, Variant::kStingy, sol.row, sol.col);
            CHECK(verdict.epsilon_well_supported <= 1e-10);
            CHECK(classify_support_shape(sol.row.support(), sol.col.support(), k) ==
                  SupportShape::kAlternatingCoinciding);
            // change-point weights are the w-ratios and are positive
            CHECK(sol.col.weight(sol.change_c - 1) > 0.0);
            CHECK(sol.col.weight(sol.change_c) > 0.0);
        }
    }
    CHECK(found >= 10);
}

TEST_CASE("search races carry an alternating equilibrium at small scale") {
    // frozen from exact evaluation: both conditions hold and the start
    // matches the coinciding one (odd gap)
    const auto outcome = alternating_equilibrium(grover_schedule(1000));
    REQUIRE(std::holds_alternative<EquilibriumSolution>(outcome));
    CHECK(std::get<EquilibriumSolution>(outcome).start_t == 11);
    const auto larger = alternating_equilibrium(grover_schedule(10000));
    REQUIRE(std::holds_alternative<EquilibriumSolution>(larger));
    CHECK(std::get<EquilibriumSolution>(larger).start_t == 35);
}

TEST_CASE("start relations on convex and general schedules") {
    for (std::int64_t n : {1000LL, 10000LL, 100000LL}) {
        const ProbabilitySchedule s = grover_schedule(n);
        const StartRelations rel = tstar_relations_check(s);
        CHECK(rel.convex);
        CHECK(rel.parity_relation_holds);
        CHECK(rel.general_bound_holds);
    }
    // K=2 race: T* = 1, K - T* odd, starts coincide
    const StartRelations tiny = tstar_relations_check(custom_schedule({0.3, 0.6}));
    CHECK(tiny.t_star == 1);
    CHECK(tiny.t_star_alternating == 1);
    CHECK(tiny.parity_relation_holds);

    // the one-sided bound T* <= T~* + 1 needs no convexity
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        const ProbabilitySchedule s = testing::random_schedule(rng, 3 + int(rng() % 8));
        CHECK(tstar_relations_check(s).general_bound_holds);
    }
}

TEST_CASE("candidate starts are sandwiched around the coinciding start") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 3 + int(rng() % 3);
        const auto probs = testing::random_rational_schedule(rng, k);
        const auto side = closed_form::side_internals(probs, probs);
        const auto alt = closed_form::alternating_core(probs);
        const auto scan = closed_form::alt_coinciding_scan(probs);
        for (const auto& cand : scan) {
            CHECK(cand.start_t >= side.t_star - 1);
            CHECK(cand.start_t <= alt.t_star + 1);
        }
    }
}
