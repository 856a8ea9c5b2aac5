#include "qrace/limits.hpp"

#include <cstdlib>

namespace qrace::limits {
namespace {

std::int64_t env_or(const char* name, std::int64_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const long long parsed = std::strtoll(v, &end, 10);
    if (end == v || parsed <= 0) return fallback;
    return static_cast<std::int64_t>(parsed);
}

}  // namespace

std::int64_t max_materialized_k() {
    static const std::int64_t cap = env_or("QRACE_MAX_K", 10'000'000);
    return cap;
}

std::int64_t max_matrix_k() {
    static const std::int64_t cap = env_or("QRACE_MAX_MATRIX_K", 10'000);
    return cap;
}

}  // namespace qrace::limits
