// Exact-rational cross-validation of every closed-form solver against
// exhaustive support enumeration, including the p_K = 1 boundary and the
// asymmetric two-player case.

#include <random>
#include <set>

#include "doctest.h"
#include "qrace/rational.hpp"
#include "qrace/verify.hpp"
#include "test_helpers.hpp"

using namespace qrace;

namespace {

std::vector<int> support_of(const std::vector<Rational>& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0) out.push_back(static_cast<int>(i + 1));
    }
    return out;
}

using Pair = std::pair<std::vector<Rational>, std::vector<Rational>>;

void cross_validate_symmetric(const std::vector<Rational>& probs) {
    const int k = static_cast<int>(probs.size());
    const auto [a0, b0] = stingy_matrices(probs);
    std::set<Pair> alternating, alt_coinciding;
    int coinciding = 0;
    const auto exact = coinciding_weights_exact(probs);
    for (const auto& eq : support_enumeration(a0, b0)) {
        if (eq.degenerate) continue;
        const SupportShape shape =
            classify_support_shape(support_of(eq.x), support_of(eq.y), k);
        REQUIRE(shape != SupportShape::kOther);
        if (shape == SupportShape::kCoinciding) {
            ++coinciding;
            CHECK(eq.x == exact);
            CHECK(eq.y == exact);
        } else if (shape == SupportShape::kAlternating) {
            alternating.insert({eq.x, eq.y});
        } else {
            alt_coinciding.insert({eq.x, eq.y});
        }
    }
    CHECK(coinciding == 1);
    const auto core = closed_form::alternating_core(probs);
    if (core.exists) {
        std::vector<Rational> early, late;
        closed_form::alternating_weights(core, k, early, late);
        CHECK(alternating.count({early, late}) == 1);
        CHECK(alternating.count({late, early}) == 1);
        CHECK(alternating.size() == 2);
    } else {
        CHECK(alternating.empty());
    }
    std::size_t solver_count = 0;
    for (const auto& cand : closed_form::alt_coinciding_scan(probs)) {
        if (!cand.feasible) continue;
        ++solver_count;
        CHECK(alt_coinciding.count({cand.x, cand.y}) == 1);
        CHECK(alt_coinciding.count({cand.y, cand.x}) == 1);
    }
    CHECK(alt_coinciding.size() == 2 * solver_count);
}

}  // namespace

TEST_CASE("solver family vs enumeration at K = 5 and 6") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 12; ++trial) {
        cross_validate_symmetric(testing::random_rational_schedule(rng, 5, 60));
    }
    for (int trial = 0; trial < 5; ++trial) {
        cross_validate_symmetric(testing::random_rational_schedule(rng, 6, 60));
    }
}

TEST_CASE("solver family vs enumeration with certain success at K") {
    std::mt19937_64 rng(92);
    for (int trial = 0; trial < 25; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 3);
        auto probs = testing::random_rational_schedule(rng, k);
        probs.back() = Rational(1);  // p_K = 1
        if (probs[probs.size() - 2] >= probs.back()) continue;
        cross_validate_symmetric(probs);
    }
}

TEST_CASE("asymmetric closed form vs enumeration") {
    std::mt19937_64 rng(93);
    int with_eq = 0, without_eq = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const auto row = testing::random_rational_schedule(rng, k);
        const auto col = testing::random_rational_schedule(rng, k);
        const auto side_row = closed_form::side_internals(row, col);
        const auto side_col = closed_form::side_internals(col, row);
        // stingy matrices of the asymmetric race
        Matrix<Rational> a0(k, k), b0(k, k);
        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= k; ++j) {
                a0.at(i, j) =
                    i < j ? row[i - 1] : row[i - 1] * (Rational(1) - col[j - 1]);
                b0.at(i, j) =
                    j < i ? col[j - 1] : col[j - 1] * (Rational(1) - row[i - 1]);
            }
        }
        std::vector<Pair> coinciding;
        for (const auto& eq : support_enumeration(a0, b0)) {
            if (eq.degenerate) continue;
            const auto sx = support_of(eq.x);
            const auto sy = support_of(eq.y);
            if (sx == sy) coinciding.push_back({eq.x, eq.y});
        }
        if (side_row.t_star == side_col.t_star) {
            ++with_eq;
            REQUIRE(coinciding.size() == 1);
            CHECK(coinciding[0].first == closed_form::coinciding_weights(side_row));
            CHECK(coinciding[0].second == closed_form::coinciding_weights(side_col));
        } else {
            ++without_eq;
            CHECK(coinciding.empty());
        }
    }
    // the search exercised both outcomes
    CHECK(with_eq > 0);
    CHECK(without_eq > 0);
}
