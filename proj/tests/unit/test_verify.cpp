#include <cmath>
#include <random>

#include "doctest.h"
#include "qrace/constants.hpp"
#include "qrace/rational.hpp"
#include "qrace/solve2.hpp"
#include "qrace/verify.hpp"
#include "test_helpers.hpp"

using namespace qrace;

namespace {
const ProbabilitySchedule kTiny = custom_schedule({0.3, 0.6});
}

TEST_CASE("best responses") {
    const PayoffMatrix a0 = payoff_matrix_2p(kTiny, kTiny, Variant::kStingy, Player::kRow);
    const MixedStrategy eq({2.0 / 9.0, 7.0 / 9.0});
    const BestResponseSet br = best_response_set(a0, eq);
    CHECK(br.responses == std::vector<int>{1, 2});
    CHECK(br.payoffs[0] == doctest::Approx(0.28).epsilon(1e-13));
    CHECK(br.payoffs[1] == doctest::Approx(0.28).epsilon(1e-13));

    const BestResponseSet vs_pure = best_response_set(a0, MixedStrategy::pure(1, 2));
    CHECK(vs_pure.responses == std::vector<int>{2});
    CHECK(vs_pure.payoffs[0] == doctest::Approx(0.21).epsilon(1e-13));
    CHECK(vs_pure.payoffs[1] == doctest::Approx(0.42).epsilon(1e-13));

    // constant matrix: everything is a best response
    PayoffMatrix flat(3, Variant::kStingy, Player::kRow);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) flat.at(i, j) = 0.5;
    }
    CHECK(best_response_set(flat, MixedStrategy::uniform(3)).responses ==
          std::vector<int>{1, 2, 3});
}

TEST_CASE("verdicts on the tiny race") {
    const PayoffMatrix a0 = payoff_matrix_2p(kTiny, kTiny, Variant::kStingy, Player::kRow);
    const PayoffMatrix b0 = payoff_matrix_2p(kTiny, kTiny, Variant::kStingy, Player::kColumn);
    const MixedStrategy eq({2.0 / 9.0, 7.0 / 9.0});
    const NashVerdict exact = verify_profile(a0, b0, eq, eq, 1e-10);
    CHECK(exact.is_exact);
    CHECK(exact.epsilon_approx <= exact.epsilon_well_supported);

    // both playing time 1: deviating to 2 gains 0.42 - 0.21
    const NashVerdict off =
        verify_profile(a0, b0, MixedStrategy::pure(1, 2), MixedStrategy::pure(1, 2), 1e-10);
    CHECK_FALSE(off.is_exact);
    CHECK(off.epsilon_approx == doctest::Approx(0.21).epsilon(1e-13));
    CHECK(off.worst_deviations[0].best_response == 2);
}

TEST_CASE("approximate epsilon never exceeds well-supported epsilon") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + int(rng() % 5);
        const ProbabilitySchedule row = testing::random_schedule(rng, k);
        const ProbabilitySchedule col = testing::random_schedule(rng, k);
        const MixedStrategy x = testing::random_strategy(rng, k);
        const MixedStrategy y = testing::random_strategy(rng, k);
        for (Variant v : {Variant::kStingy, Variant::kTieSplitting}) {
            const NashVerdict verdict = verify_race_profile(row, col, v, x, y);
            CHECK(verdict.epsilon_approx <= verdict.epsilon_well_supported + 1e-15);
            // matrix-free evaluators match the dense matrices
            const PayoffMatrix a = payoff_matrix_2p(row, col, v, Player::kRow);
            const PayoffMatrix b = payoff_matrix_2p(row, col, v, Player::kColumn);
            const NashVerdict dense = verify_profile(a, b, x, y);
            CHECK(verdict.epsilon_approx ==
                  doctest::Approx(dense.epsilon_approx).epsilon(1e-12).scale(1.0));
            CHECK(verdict.epsilon_well_supported ==
                  doctest::Approx(dense.epsilon_well_supported).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("stingy equilibrium is well-supported in the tie-splitting race") {
    for (std::int64_t n_items : {10000LL, 100000LL}) {
        const ProbabilitySchedule s = grover_schedule(n_items);
        const DensityReport density = density_report(s);
        const EquilibriumSolution sol = coinciding_equilibrium(s);
        const NashVerdict verdict =
            verify_race_profile(s, s, Variant::kTieSplitting, sol.row, sol.col);
        CHECK(verdict.epsilon_approx >= 0.0);
        CHECK(verdict.epsilon_well_supported <=
              bounds::well_supported_bound(density.ell, s.size()));
    }
}

TEST_CASE("support enumeration on the tiny race finds all three equilibria") {
    const PayoffMatrix a0 = payoff_matrix_2p(kTiny, kTiny, Variant::kStingy, Player::kRow);
    const PayoffMatrix b0 = payoff_matrix_2p(kTiny, kTiny, Variant::kStingy, Player::kColumn);
    const auto found = support_enumeration_2p(a0, b0);
    REQUIRE(found.size() == 3);
    int coinciding = 0, alternating = 0;
    for (const auto& eq : found) {
        std::vector<int> sx, sy;
        for (int t = 1; t <= 2; ++t) {
            if (eq.x[t - 1] > 0) sx.push_back(t);
            if (eq.y[t - 1] > 0) sy.push_back(t);
        }
        switch (classify_support_shape(sx, sy, 2)) {
            case SupportShape::kCoinciding:
                ++coinciding;
                CHECK(eq.x[0] == doctest::Approx(2.0 / 9.0).epsilon(1e-10));
                CHECK(eq.payoff_row == doctest::Approx(0.28).epsilon(1e-10));
                break;
            case SupportShape::kAlternating:
                ++alternating;
                break;
            default:
                FAIL("unexpected support shape");
        }
    }
    CHECK(coinciding == 1);
    CHECK(alternating == 2);
}

TEST_CASE("zero matrix: degenerate equilibria are flagged, not skipped") {
    Matrix<double> zero(2, 2);
    const auto found = support_enumeration(zero, zero);
    CHECK(found.size() == 9);  // every support pair carries a representative
    int degenerate = 0;
    for (const auto& eq : found) degenerate += eq.degenerate ? 1 : 0;
    CHECK(degenerate == 5);  // singleton-against-singleton systems are determined
}

TEST_CASE("enumeration guard") {
    Matrix<double> big(7, 7);
    CHECK_THROWS(support_enumeration(big, big));
}

TEST_CASE("exact enumeration matches the exact closed form on rational games") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 15; ++trial) {
        const int k = 2 + int(rng() % 3);
        const auto probs = testing::random_rational_schedule(rng, k);
        const auto [a0, b0] = stingy_matrices(probs);
        const auto found = support_enumeration(a0, b0);
        const auto exact = coinciding_weights_exact(probs);
        int coinciding = 0;
        for (const auto& eq : found) {
            std::vector<int> sx, sy;
            for (int t = 1; t <= k; ++t) {
                if (eq.x[t - 1] > 0) sx.push_back(t);
                if (eq.y[t - 1] > 0) sy.push_back(t);
            }
            const SupportShape shape = classify_support_shape(sx, sy, k);
            if (!eq.degenerate) CHECK(shape != SupportShape::kOther);
            if (shape == SupportShape::kCoinciding) {
                ++coinciding;
                CHECK(eq.x == exact);
                CHECK(eq.y == exact);
            }
        }
        CHECK(coinciding == 1);
    }
}

TEST_CASE("quadratic-program identity at exact equilibria") {
    // At an equilibrium, each payoff equals its best-response level, so
    // x'(A+B)y - alpha - beta vanishes.
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 2 + int(rng() % 3);
        const ProbabilitySchedule s = testing::random_schedule(rng, k);
        const PayoffMatrix a = payoff_matrix_2p(s, s, Variant::kTieSplitting, Player::kRow);
        const PayoffMatrix b = payoff_matrix_2p(s, s, Variant::kTieSplitting, Player::kColumn);
        for (const auto& eq : support_enumeration_2p(a, b)) {
            MixedStrategy x(eq.x), y(eq.y);
            const double alpha = best_response_set(a, y).best;
            std::vector<double> col_payoffs(static_cast<std::size_t>(k));
            for (int j = 1; j <= k; ++j) {
                double v = 0.0;
                for (int i : x.support()) v += x.weight(i) * b.at(i, j);
                col_payoffs[j - 1] = v;
            }
            const double beta = best_response_from_payoffs(col_payoffs).best;
            const double cross =
                expected_payoff_2p(a, x, y) + expected_payoff_2p(b, x, y);
            CHECK(cross - alpha - beta == doctest::Approx(0.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("n-player verdict agrees with the two-player one") {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 15; ++trial) {
        const int k = 2 + int(rng() % 4);
        const ProbabilitySchedule s = testing::random_schedule(rng, k);
        const MixedStrategy x = testing::random_strategy(rng, k);
        const MixedStrategy y = testing::random_strategy(rng, k);
        for (Variant v : {Variant::kStingy, Variant::kTieSplitting}) {
            RaceConfig cfg(2, s, v);
            const NashVerdict np = verify_profile_np(cfg, {x, y});
            const NashVerdict two = verify_race_profile(s, s, v, x, y);
            CHECK(np.epsilon_well_supported ==
                  doctest::Approx(two.epsilon_well_supported).epsilon(1e-11).scale(1.0));
            CHECK(np.epsilon_approx ==
                  doctest::Approx(two.epsilon_approx).epsilon(1e-11).scale(1.0));
        }
    }
}
