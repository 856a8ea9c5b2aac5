#pragma once

#include <cmath>

namespace qrace {

// Neumaier-compensated accumulator.  The suffix sums behind the closed-form
// solvers mix terms spanning many orders of magnitude when the early
// success probabilities are small; plain summation loses the small tail.
struct CompensatedSum {
    double total = 0.0;
    double correction = 0.0;

    void add(double v) {
        const double t = total + v;
        if (std::abs(total) >= std::abs(v)) {
            correction += (total - t) + v;
        } else {
            correction += (v - t) + total;
        }
        total = t;
    }
    double value() const { return total + correction; }
};

namespace detail {

template <class S>
struct PlainSum {
    S total{};
    void add(const S& v) { total += v; }
    S value() const { return total; }
};

// Accumulator selector: compensated for double, plain for exact scalars.
template <class S>
struct SumFor {
    using type = PlainSum<S>;
};
template <>
struct SumFor<double> {
    using type = CompensatedSum;
};

template <class S>
using sum_t = typename SumFor<S>::type;

}  // namespace detail
}  // namespace qrace
