#pragma once

#include <cstdint>

namespace qrace::limits {

// Largest K for which a schedule is materialized in memory.  Above this,
// race parameters are reported analytically only.  Override with QRACE_MAX_K.
std::int64_t max_materialized_k();

// Largest K for which a dense K x K payoff matrix is built.  Larger games
// must use the matrix-free evaluators.  Override with QRACE_MAX_MATRIX_K.
std::int64_t max_matrix_k();

}  // namespace qrace::limits
