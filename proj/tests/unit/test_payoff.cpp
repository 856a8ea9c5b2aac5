#include <cmath>
#include <random>

#include "doctest.h"
#include "qrace/payoff.hpp"
#include "test_helpers.hpp"

using namespace qrace;

namespace {
const ProbabilitySchedule kTiny = custom_schedule({0.3, 0.6});
}

TEST_CASE("two-player matrices match the case analysis") {
    const PayoffMatrix a0 = payoff_matrix_2p(kTiny, kTiny, Variant::kStingy, Player::kRow);
    CHECK(a0.at(1, 1) == doctest::Approx(0.21).epsilon(1e-15));
    CHECK(a0.at(1, 2) == doctest::Approx(0.30).epsilon(1e-15));
    CHECK(a0.at(2, 1) == doctest::Approx(0.42).epsilon(1e-15));
    CHECK(a0.at(2, 2) == doctest::Approx(0.24).epsilon(1e-15));

    const PayoffMatrix a = payoff_matrix_2p(kTiny, kTiny, Variant::kTieSplitting, Player::kRow);
    CHECK(a.at(1, 1) == doctest::Approx(0.255).epsilon(1e-15));
    CHECK(a.at(1, 2) == doctest::Approx(0.30).epsilon(1e-15));
    CHECK(a.at(2, 1) == doctest::Approx(0.42).epsilon(1e-15));
    CHECK(a.at(2, 2) == doctest::Approx(0.42).epsilon(1e-15));
}

TEST_CASE("tie-splitting equals stingy plus half the tie diagonal") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 2 + int(rng() % 5);
        const ProbabilitySchedule row = testing::random_schedule(rng, k);
        const ProbabilitySchedule col = testing::random_schedule(rng, k);
        const PayoffMatrix a0 = payoff_matrix_2p(row, col, Variant::kStingy, Player::kRow);
        const PayoffMatrix a = payoff_matrix_2p(row, col, Variant::kTieSplitting, Player::kRow);
        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= k; ++j) {
                const double extra = i == j ? 0.5 * row.p(i) * col.p(i) : 0.0;
                CHECK(a.at(i, j) == a0.at(i, j) + extra);  // exact in doubles
                CHECK(a.at(i, j) >= 0.0);
                CHECK(a.at(i, j) <= 1.0);
            }
        }
    }
}

TEST_CASE("symmetric games have B equal to A transposed, exactly") {
    std::mt19937_64 rng(22);
    for (Variant v : {Variant::kStingy, Variant::kTieSplitting}) {
        const ProbabilitySchedule s = testing::random_schedule(rng, 5);
        const PayoffMatrix a = payoff_matrix_2p(s, s, v, Player::kRow);
        const PayoffMatrix b = payoff_matrix_2p(s, s, v, Player::kColumn);
        for (int i = 1; i <= 5; ++i) {
            for (int j = 1; j <= 5; ++j) CHECK(b.at(i, j) == a.at(j, i));
        }
    }
}

TEST_CASE("expected payoff bilinear form") {
    const PayoffMatrix a0 = payoff_matrix_2p(kTiny, kTiny, Variant::kStingy, Player::kRow);
    CHECK(expected_payoff_2p(a0, MixedStrategy::pure(1, 2), MixedStrategy::pure(2, 2)) ==
          doctest::Approx(0.3).epsilon(1e-15));
    CHECK(expected_payoff_2p(a0, MixedStrategy::uniform(2), MixedStrategy::uniform(2)) ==
          doctest::Approx(0.2925).epsilon(1e-13));
    const MixedStrategy eq({2.0 / 9.0, 7.0 / 9.0});
    CHECK(expected_payoff_2p(a0, eq, eq) == doctest::Approx(0.28).epsilon(1e-13));
}

TEST_CASE("pure-profile utilities") {
    RaceConfig two(2, kTiny);
    const auto u12 = utility_np_pure(two, {1, 2});
    CHECK(u12[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(u12[1] == doctest::Approx(0.42).epsilon(1e-15));

    RaceConfig three(3, custom_schedule({0.2, 0.5, 0.9}));
    const auto u = utility_np_pure(three, {1, 2, 3});
    CHECK(u[0] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(u[1] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(u[2] == doctest::Approx(0.36).epsilon(1e-15));

    // certain success at the common time blocks everyone who ties
    RaceConfig certain(3, custom_schedule({0.5, 1.0}));
    const auto blocked = utility_np_pure(certain, {2, 2, 2});
    for (double v : blocked) CHECK(v == 0.0);

    CHECK_THROWS(utility_np_pure(two, {0, 1}));
    CHECK_THROWS(utility_np_pure(two, {1, 3}));
}

TEST_CASE("mixed utility closed forms") {
    RaceConfig three(3, kTiny);
    // opponents uniform on both times, querying t=2
    std::vector<MixedStrategy> profile(3, MixedStrategy::uniform(2));
    CHECK(utility_np_mixed(three, 0, profile, 2) ==
          doctest::Approx(0.6 * 0.3025).epsilon(1e-13));
    // opponents pure later than t: utility is the bare success probability
    std::vector<MixedStrategy> late{MixedStrategy::uniform(2), MixedStrategy::pure(2, 2),
                                    MixedStrategy::pure(2, 2)};
    CHECK(utility_np_mixed(three, 0, late, 1) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("two-player utilities agree with the matrix bilinear forms") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 2 + int(rng() % 4);
        const ProbabilitySchedule row = testing::random_schedule(rng, k);
        const ProbabilitySchedule col = testing::random_schedule(rng, k);
        RaceConfig cfg(row, col);
        const PayoffMatrix a0 = payoff_matrix_2p(row, col, Variant::kStingy, Player::kRow);
        const PayoffMatrix b0 = payoff_matrix_2p(row, col, Variant::kStingy, Player::kColumn);
        const MixedStrategy y = testing::random_strategy(rng, k);
        const MixedStrategy x = testing::random_strategy(rng, k);
        std::vector<MixedStrategy> profile{x, y};
        for (int t = 1; t <= k; ++t) {
            CHECK(utility_np_mixed(cfg, 0, profile, t) ==
                  doctest::Approx(expected_payoff_2p(a0, MixedStrategy::pure(t, k), y))
                      .epsilon(1e-12));
            CHECK(utility_np_mixed(cfg, 1, profile, t) ==
                  doctest::Approx(expected_payoff_2p(b0, x, MixedStrategy::pure(t, k)))
                      .epsilon(1e-12));
        }
        // pure utilities match matrix entries entrywise
        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= k; ++j) {
                const auto u = utility_np_pure(cfg, {i, j});
                CHECK(u[0] == doctest::Approx(a0.at(i, j)).epsilon(1e-14));
                CHECK(u[1] == doctest::Approx(b0.at(i, j)).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("tie profile closed cases") {
    RaceConfig two(2, kTiny);
    // both pure at t: tie probability is P_t^2
    for (int t = 1; t <= 2; ++t) {
        std::vector<MixedStrategy> both{MixedStrategy::pure(t, 2), MixedStrategy::pure(t, 2)};
        const TieProfile tp = tie_profile(two, 0, both);
        const double pt = kTiny.p(t);
        CHECK(tp.total == doctest::Approx(pt * pt).epsilon(1e-14));
        CHECK(tp.by_multiplicity[0] == doctest::Approx(pt * pt).epsilon(1e-14));
    }
    // disjoint pure times never tie
    std::vector<MixedStrategy> disjoint{MixedStrategy::pure(1, 2), MixedStrategy::pure(2, 2)};
    CHECK(tie_profile(two, 0, disjoint).total == 0.0);

    // three players all pure at a time with probability 1/2
    RaceConfig three(3, custom_schedule({0.5, 0.9}));
    std::vector<MixedStrategy> all1(3, MixedStrategy::pure(1, 2));
    const TieProfile tp = tie_profile(three, 0, all1);
    CHECK(tp.by_multiplicity[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(tp.by_multiplicity[1] == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("tie-splitting utility identities") {
    RaceConfig two(2, kTiny, Variant::kTieSplitting);
    const PayoffMatrix a = payoff_matrix_2p(kTiny, kTiny, Variant::kTieSplitting, Player::kRow);
    for (int t = 1; t <= 2; ++t) {
        std::vector<MixedStrategy> both{MixedStrategy::pure(t, 2), MixedStrategy::pure(t, 2)};
        CHECK(utility_np_quantum(two, 0, both) == doctest::Approx(a.at(t, t)).epsilon(1e-14));
    }
}

TEST_CASE("tie machinery against brute-force enumeration") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + int(rng() % 3);
        const int k = 2 + int(rng() % 3);
        RaceConfig cfg(n, testing::random_schedule(rng, k));
        std::vector<MixedStrategy> profile;
        for (int i = 0; i < n; ++i) profile.push_back(testing::random_strategy(rng, k));
        const auto oracle = testing::brute_force_outcomes(cfg, profile);
        double stingy_total = 0.0;
        double shared_tie = 0.0;
        for (int i = 0; i < n; ++i) {
            const TieProfile tp = tie_profile(cfg, i, profile);
            for (int m = 2; m <= n; ++m) {
                CHECK(tp.by_multiplicity[m - 2] ==
                      doctest::Approx(oracle.cp[i][m - 2]).epsilon(1e-10).scale(1.0));
            }
            CHECK(utility_np_stingy(cfg, i, profile) ==
                  doctest::Approx(oracle.stingy[i]).epsilon(1e-10).scale(1.0));
            CHECK(utility_np_quantum(cfg, i, profile) ==
                  doctest::Approx(oracle.quantum[i]).epsilon(1e-10).scale(1.0));
            // the tie-split bonus never exceeds the full tie probability
            CHECK(utility_np_quantum(cfg, i, profile) <=
                  utility_np_stingy(cfg, i, profile) + tp.total + 1e-15);
            stingy_total += oracle.stingy[i];
            shared_tie += tp.shared();
        }
        CHECK(nobody_succeeds_probability(cfg, profile) ==
              doctest::Approx(oracle.nobody).epsilon(1e-10).scale(1.0));
        // total probability: wins + tie event + nobody = 1
        CHECK(stingy_total + oracle.tie_event + oracle.nobody ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(shared_tie == doctest::Approx(oracle.tie_event).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("tie-splitting utility is linear in the deviating player's strategy") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3;
        const int k = 3;
        RaceConfig cfg(n, testing::random_schedule(rng, k), Variant::kTieSplitting);
        std::vector<MixedStrategy> profile;
        for (int i = 0; i < n; ++i) profile.push_back(testing::random_strategy(rng, k));
        const MixedStrategy own = profile[0];
        double mixture = 0.0;
        for (int t = 1; t <= k; ++t) {
            profile[0] = MixedStrategy::pure(t, k);
            mixture += own.weight(t) * utility_np_quantum(cfg, 0, profile);
        }
        profile[0] = own;
        CHECK(utility_np_quantum(cfg, 0, profile) ==
              doctest::Approx(mixture).epsilon(1e-11).scale(1.0));
    }
}
