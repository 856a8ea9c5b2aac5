#pragma once

#include <string>
#include <vector>

#include "qrace/schedule.hpp"

namespace qrace {

// Feasible point of the dual of the symmetric-payoff quadratic program.
// Any feasible (v, lambda, d) with objective lambda^2/2 + c 1'v + d below c
// certifies that no symmetric equilibrium of the tie-splitting race has
// payoff c or more.  For c > 1/2 the trivial point (lambda=1, d=0, v=0)
// already certifies; otherwise the closed-form construction below S, the
// first index with p_S >= c, is used with lambda = beta(c).
struct DualCertificate {
    double c = 0.0;
    int s = 0;                 // 0 for the trivial certificate
    double lambda = 0.0;
    double d = 0.0;
    std::vector<double> v;
    double beta = 0.0;
    double objective = 0.0;
    bool feasible = false;
    bool trivial = false;
    double worst_slack = 0.0;  // min over constraints of (A'v)_i - ((1-lambda)p_i - d)
};

// beta(c) = 1 + p_K (-(1-p_S)/p_S + c sum_{i=S}^{K-1} (1/p_i)(1/p_i - 1/p_{i+1})).
double dual_beta(const ProbabilitySchedule& s, double c);

DualCertificate dual_certificate(const ProbabilitySchedule& s, double c);

// Ceiling sqrt2 - 1 + 5 sqrt(ell/K) on the payoff of any symmetric
// equilibrium, together with the verified certificate at that level.
struct PayoffCeilingReport {
    bool applicable = true;
    std::string reason;
    double ceiling = 0.0;
    DualCertificate certificate;
};

PayoffCeilingReport payoff_ceiling(const ProbabilitySchedule& s,
                                   const DensityReport& density);

// Certificates on an even grid over [sqrt2 - 1, 1/2].
std::vector<DualCertificate> dual_sweep(const ProbabilitySchedule& s, int points = 200);

}  // namespace qrace
