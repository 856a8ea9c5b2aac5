#pragma once

// Independent oracles: best-response analysis, epsilon-Nash verdicts for
// arbitrary bimatrix games and race profiles, and exhaustive support
// enumeration for tiny games.  The enumeration is scalar-generic so it can
// run in exact rational arithmetic against the closed-form solvers.

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qrace/payoff.hpp"
#include "qrace/schedule.hpp"
#include "qrace/strategy.hpp"

namespace qrace {

template <class S>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<S> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, S{}) {}

    const S& at(int i, int j) const { return a[idx(i, j)]; }
    S& at(int i, int j) { return a[idx(i, j)]; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols) +
               static_cast<std::size_t>(j - 1);
    }
};

struct BestResponseSet {
    std::vector<int> responses;   // all maximizers, ties within 1e-12
    std::vector<double> payoffs;  // full payoff vector e_t M y
    double best = 0.0;
};

BestResponseSet best_response_set(const PayoffMatrix& m, const MixedStrategy& y);
BestResponseSet best_response_from_payoffs(std::vector<double> payoffs);

// Row player's payoff vector (e_i A y)_i and column player's (x B e_j)_j for
// race games, computed matrix-free in O(K) via prefix sums.
std::vector<double> race_row_payoffs(const ProbabilitySchedule& row,
                                     const ProbabilitySchedule& col, Variant v,
                                     const MixedStrategy& y);
std::vector<double> race_col_payoffs(const ProbabilitySchedule& row,
                                     const ProbabilitySchedule& col, Variant v,
                                     const MixedStrategy& x);

struct DeviationInfo {
    int player = 0;        // 0-based
    int best_response = 0; // time, 1-based
    double gain = 0.0;     // payoff improvement over the current strategy
};

// epsilon_approx: smallest eps such that no player gains more than eps by any
// deviation.  epsilon_well_supported: smallest eps such that every supported
// pure strategy is within eps of the best response.  The former never
// exceeds the latter.
struct NashVerdict {
    bool is_exact = false;
    double epsilon_approx = 0.0;
    double epsilon_well_supported = 0.0;
    double tolerance = 0.0;
    std::vector<DeviationInfo> worst_deviations;  // one per player
};

NashVerdict verify_profile(const PayoffMatrix& a, const PayoffMatrix& b,
                           const MixedStrategy& x, const MixedStrategy& y,
                           double tolerance = 1e-10);

// Matrix-free variant for race games of any K.
NashVerdict verify_race_profile(const ProbabilitySchedule& row,
                                const ProbabilitySchedule& col, Variant v,
                                const MixedStrategy& x, const MixedStrategy& y,
                                double tolerance = 1e-10);

// n-player generalization through the utility evaluators.
NashVerdict verify_profile_np(const RaceConfig& cfg,
                              const std::vector<MixedStrategy>& profile,
                              double tolerance = 1e-10);

template <class S>
struct EnumeratedEquilibrium {
    std::vector<S> x, y;
    S payoff_row{}, payoff_col{};
    bool degenerate = false;  // the indifference system had free variables
};

namespace detail {

template <class S>
bool is_zero(const S& v) {
    if constexpr (std::is_floating_point_v<S>) {
        return std::abs(v) < 1e-12;
    } else {
        return v == S{};
    }
}

template <class S>
bool strictly_positive(const S& v) {
    if constexpr (std::is_floating_point_v<S>) {
        return v > 1e-10;
    } else {
        return v > S{};
    }
}

template <class S>
bool leq_with_slack(const S& lhs, const S& rhs) {
    if constexpr (std::is_floating_point_v<S>) {
        return lhs <= rhs + 1e-10;
    } else {
        return lhs <= rhs;
    }
}

enum class SolveKind { kUnique, kInconsistent, kUnderdetermined };

// Gauss-Jordan with partial pivoting; free variables take `free_value`,
// which yields the uniform representative on degenerate supports.
template <class S>
SolveKind solve_linear(std::vector<std::vector<S>> m, std::vector<S> rhs,
                       const S& free_value, std::vector<S>& out) {
    const std::size_t n_rows = m.size();
    const std::size_t n_cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivot_of_col(n_cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n_cols && rank < n_rows; ++c) {
        std::size_t best = rank;
        if constexpr (std::is_floating_point_v<S>) {
            for (std::size_t r = rank + 1; r < n_rows; ++r) {
                if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
            }
        } else {
            while (best < n_rows && m[best][c] == S{}) ++best;
            if (best == n_rows) continue;
        }
        if (is_zero(m[best][c])) continue;
        std::swap(m[rank], m[best]);
        std::swap(rhs[rank], rhs[best]);
        const S pivot = m[rank][c];
        for (std::size_t cc = c; cc < n_cols; ++cc) m[rank][cc] = m[rank][cc] / pivot;
        rhs[rank] = rhs[rank] / pivot;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == rank || is_zero(m[r][c])) continue;
            const S f = m[r][c];
            for (std::size_t cc = c; cc < n_cols; ++cc) m[r][cc] -= f * m[rank][cc];
            rhs[r] -= f * rhs[rank];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < n_rows; ++r) {
        if (!is_zero(rhs[r])) return SolveKind::kInconsistent;
    }
    out.assign(n_cols, S{});
    bool degenerate = false;
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (pivot_of_col[c] < 0) {
            out[c] = free_value;
            degenerate = true;
        }
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (pivot_of_col[c] < 0) continue;
        const auto r = static_cast<std::size_t>(pivot_of_col[c]);
        S v = rhs[r];
        for (std::size_t cc = c + 1; cc < n_cols; ++cc) {
            if (pivot_of_col[cc] < 0 && !is_zero(m[r][cc])) v -= m[r][cc] * out[cc];
        }
        out[c] = v;
    }
    return degenerate ? SolveKind::kUnderdetermined : SolveKind::kUnique;
}

// Solves the indifference system for the responder's weights on `own_support`
// making every strategy in `opp_support` of the matrix side indifferent.
// payoff(i, j) must return the deviating side's payoff entry.
template <class S, class Payoff>
SolveKind indifference_solve(const std::vector<int>& opp_support,
                             const std::vector<int>& own_support, Payoff&& payoff,
                             int k, std::vector<S>& weights, S& value,
                             bool& degenerate) {
    const std::size_t n_unknowns = own_support.size() + 1;  // weights + payoff level
    std::vector<std::vector<S>> m;
    std::vector<S> rhs;
    for (int i : opp_support) {
        std::vector<S> row(n_unknowns, S{});
        for (std::size_t j = 0; j < own_support.size(); ++j) {
            row[j] = payoff(i, own_support[j]);
        }
        row[n_unknowns - 1] = S(-1);
        m.push_back(std::move(row));
        rhs.push_back(S{});
    }
    std::vector<S> norm(n_unknowns, S(1));
    norm[n_unknowns - 1] = S{};
    m.push_back(std::move(norm));
    rhs.push_back(S(1));

    std::vector<S> solution;
    const S uniform = S(1) / S(static_cast<int>(own_support.size()));
    const SolveKind kind = solve_linear<S>(std::move(m), std::move(rhs), uniform, solution);
    if (kind == SolveKind::kInconsistent) return kind;
    weights.assign(static_cast<std::size_t>(k), S{});
    for (std::size_t j = 0; j < own_support.size(); ++j) {
        weights[static_cast<std::size_t>(own_support[j] - 1)] = solution[j];
    }
    value = solution[n_unknowns - 1];
    degenerate = kind == SolveKind::kUnderdetermined;
    return kind;
}

}  // namespace detail

// Exhaustive equilibrium search over all support pairs.  Cost grows as 4^K,
// so this is gated to K <= 6.  Degenerate candidate systems yield a uniform
// representative flagged as such instead of being skipped.
template <class S>
std::vector<EnumeratedEquilibrium<S>> support_enumeration(const Matrix<S>& a,
                                                          const Matrix<S>& b) {
    if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows) {
        throw std::invalid_argument("support enumeration needs square games of equal size");
    }
    const int k = a.rows;
    if (k > 6) throw std::invalid_argument("support enumeration is limited to K <= 6");
    std::vector<EnumeratedEquilibrium<S>> found;
    const unsigned full = 1u << k;
    std::vector<int> sx, sy;
    for (unsigned mx = 1; mx < full; ++mx) {
        sx.clear();
        for (int i = 1; i <= k; ++i) {
            if (mx >> (i - 1) & 1u) sx.push_back(i);
        }
        for (unsigned my = 1; my < full; ++my) {
            sy.clear();
            for (int j = 1; j <= k; ++j) {
                if (my >> (j - 1) & 1u) sy.push_back(j);
            }
            std::vector<S> y, x;
            S alpha{}, beta{};
            bool deg_y = false, deg_x = false;
            // Row indifference over sx pins y; column indifference over sy pins x.
            auto row_payoff = [&](int i, int j) { return a.at(i, j); };
            if (detail::indifference_solve<S>(sx, sy, row_payoff, k, y, alpha, deg_y) ==
                detail::SolveKind::kInconsistent) {
                continue;
            }
            auto col_payoff = [&](int j, int i) { return b.at(i, j); };
            if (detail::indifference_solve<S>(sy, sx, col_payoff, k, x, beta, deg_x) ==
                detail::SolveKind::kInconsistent) {
                continue;
            }
            bool ok = true;
            for (int j : sy) {
                if (!detail::strictly_positive(y[static_cast<std::size_t>(j - 1)])) ok = false;
            }
            for (int i : sx) {
                if (!detail::strictly_positive(x[static_cast<std::size_t>(i - 1)])) ok = false;
            }
            if (!ok) continue;
            // Best-response inequalities off the supports.
            for (int i = 1; i <= k && ok; ++i) {
                S v{};
                for (int j : sy) v += a.at(i, j) * y[static_cast<std::size_t>(j - 1)];
                if (!detail::leq_with_slack(v, alpha)) ok = false;
            }
            for (int j = 1; j <= k && ok; ++j) {
                S v{};
                for (int i : sx) v += b.at(i, j) * x[static_cast<std::size_t>(i - 1)];
                if (!detail::leq_with_slack(v, beta)) ok = false;
            }
            if (!ok) continue;
            found.push_back({std::move(x), std::move(y), alpha, beta, deg_y || deg_x});
        }
    }
    return found;
}

// Double-precision convenience over race payoff matrices.
std::vector<EnumeratedEquilibrium<double>> support_enumeration_2p(const PayoffMatrix& a,
                                                                  const PayoffMatrix& b);

// Support-shape classifier for enumerated equilibria of stingy races.
enum class SupportShape { kCoinciding, kAlternating, kAlternatingCoinciding, kOther };

SupportShape classify_support_shape(const std::vector<int>& sup_x,
                                    const std::vector<int>& sup_y, int k);

}  // namespace qrace
