#pragma once

// Exact-rational instantiation of the closed forms and of support
// enumeration, used as a self-check oracle for small K.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "qrace/closed_form.hpp"
#include "qrace/verify.hpp"

namespace qrace {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& v) { return static_cast<double>(v); }

// Stingy payoff matrices (A0, B0) of the symmetric race over rational probs.
inline std::pair<Matrix<Rational>, Matrix<Rational>> stingy_matrices(
    const std::vector<Rational>& probs) {
    const int k = static_cast<int>(probs.size());
    Matrix<Rational> a(k, k), b(k, k);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            a.at(i, j) = i < j ? probs[i - 1] : probs[i - 1] * (Rational(1) - probs[j - 1]);
            b.at(i, j) = j < i ? probs[j - 1] : probs[j - 1] * (Rational(1) - probs[i - 1]);
        }
    }
    return {std::move(a), std::move(b)};
}

// Coinciding-equilibrium weights of the symmetric race, exactly.
inline std::vector<Rational> coinciding_weights_exact(const std::vector<Rational>& probs) {
    const auto side = closed_form::side_internals(probs, probs);
    return closed_form::coinciding_weights(side);
}

}  // namespace qrace
