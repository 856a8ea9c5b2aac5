#include "qrace/dual.hpp"

#include <cmath>
#include <stdexcept>

#include "qrace/constants.hpp"
#include "qrace/summation.hpp"

namespace qrace {
namespace {

// Feasibility slack of A'v >= (1-lambda)p - d 1 on the tie-splitting matrix,
// computed matrix-free: (A0'v)_i = sum_{j<i} v_j p_j + (1-p_i) sum_{j>=i} v_j p_j
// and the tie term adds p_i^2 v_i / 2.
double feasibility_slack(const ProbabilitySchedule& s, const std::vector<double>& v,
                         double lambda, double d) {
    const int k = s.size();
    double tail = 0.0;  // sum_{j>=i} v_j p_j
    for (int j = 1; j <= k; ++j) tail += v[j - 1] * s.p(j);
    double head = 0.0;  // sum_{j<i} v_j p_j
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= k; ++i) {
        const double col = head + s.pbar(i) * tail + 0.5 * s.p(i) * s.p(i) * v[i - 1];
        const double slack = col - ((1.0 - lambda) * s.p(i) - d);
        if (slack < worst) worst = slack;
        head += v[i - 1] * s.p(i);
        tail -= v[i - 1] * s.p(i);
    }
    return worst;
}

int first_index_at_least(const ProbabilitySchedule& s, double c) {
    for (int i = 1; i <= s.size(); ++i) {
        if (s.p(i) >= c) return i;
    }
    return 0;
}

}  // namespace

double dual_beta(const ProbabilitySchedule& s, double c) {
    const int k = s.size();
    const int first = first_index_at_least(s, c);
    if (first == 0) throw std::invalid_argument("no index with p_i >= c");
    CompensatedSum curvature;
    for (int i = first; i <= k - 1; ++i) {
        curvature.add((1.0 / s.p(i)) * (1.0 / s.p(i) - 1.0 / s.p(i + 1)));
    }
    return 1.0 + s.p(k) * (-s.pbar(first) / s.p(first) + c * curvature.value());
}

DualCertificate dual_certificate(const ProbabilitySchedule& s, double c) {
    if (!(c >= bounds::kPayoffCap)) {
        throw std::invalid_argument("certificate level must be at least sqrt2 - 1");
    }
    const int k = s.size();
    DualCertificate cert;
    cert.c = c;
    cert.v.assign(static_cast<std::size_t>(k), 0.0);
    if (c > 0.5) {
        cert.trivial = true;
        cert.lambda = 1.0;
        cert.d = 0.0;
        cert.beta = 1.0;
        cert.objective = 0.5;
        cert.worst_slack = feasibility_slack(s, cert.v, cert.lambda, cert.d);
        cert.feasible = cert.worst_slack >= -1e-12;
        return cert;
    }
    const int first = first_index_at_least(s, c);
    if (first == 0) throw std::invalid_argument("no index with p_i >= c");
    cert.s = first;
    cert.beta = dual_beta(s, c);
    cert.lambda = cert.beta;
    const double one_minus = 1.0 - cert.lambda;
    cert.d = one_minus * (1.0 + s.p(k) - s.p(k) / s.p(first));
    // 1 - lambda - d collapses to (1-lambda) p_K (1-p_S)/p_S; using the
    // collapsed form keeps v(K) at exactly zero.
    const double residue = one_minus * s.p(k) * s.pbar(first) / s.p(first);
    for (int i = first; i <= k - 1; ++i) {
        cert.v[i - 1] = residue * (s.p(first) / s.pbar(first)) * (1.0 / s.p(i)) *
                        (1.0 / s.p(i) - 1.0 / s.p(i + 1));
    }
    cert.v[k - 1] = 0.0;
    CompensatedSum v_total;
    for (double vi : cert.v) v_total.add(vi);
    cert.objective = 0.5 * cert.lambda * cert.lambda + c * v_total.value() + cert.d;
    cert.worst_slack = feasibility_slack(s, cert.v, cert.lambda, cert.d);
    bool nonneg = cert.lambda <= 1.0;
    for (double vi : cert.v) nonneg = nonneg && vi >= 0.0;
    cert.feasible = nonneg && cert.worst_slack >= -1e-12;
    return cert;
}

std::vector<DualCertificate> dual_sweep(const ProbabilitySchedule& s, int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<DualCertificate> out;
    out.reserve(static_cast<std::size_t>(points));
    const double lo = bounds::kPayoffCap;
    const double hi = 0.5;
    for (int i = 0; i < points; ++i) {
        const double c = lo + (hi - lo) * i / (points - 1);
        out.push_back(dual_certificate(s, c));
    }
    return out;
}

PayoffCeilingReport payoff_ceiling(const ProbabilitySchedule& s,
                                   const DensityReport& density) {
    PayoffCeilingReport report;
    const double k = static_cast<double>(s.size());
    if (k < bounds::density_requirement_2p(density.ell)) {
        report.applicable = false;
        report.reason = "K < 6 ell";
        return report;
    }
    report.ceiling = bounds::payoff_ceiling_value(density.ell, k);
    report.certificate = dual_certificate(s, report.ceiling);
    return report;
}

}  // namespace qrace
