#pragma once

#include <variant>
#include <vector>

#include "qrace/schedule.hpp"
#include "qrace/solve2.hpp"

namespace qrace {

// Alternating-equilibrium internals of a symmetric race.  Entries indexed by
// time with [0] unused; starts restricted to K - T odd, NaN elsewhere.
struct AlternatingInternals {
    std::vector<double> q;       // two-step interior weights
    std::vector<double> r, z;    // early player's start weight and normalizer
    std::vector<double> r_end, z_end;  // late player's weight at K and normalizer
    int t_star = 0;
    bool end_weight_positive = false;
    bool top_deviation_ok = false;
    bool low_deviation_ok = true;
    bool exists = false;
    bool marginal = false;  // start decision within 1e-12 of flipping
};

AlternatingInternals alternating_internals(const ProbabilitySchedule& s);

struct NoAlternatingEquilibrium {
    AlternatingInternals internals;
    std::string reason;
};

// The unique alternating equilibrium when the existence conditions hold.
// One canonical role assignment is returned (the row player measures first);
// swap_also_equilibrium marks that the mirrored pair is an equilibrium too.
std::variant<EquilibriumSolution, NoAlternatingEquilibrium> alternating_equilibrium(
    const ProbabilitySchedule& s);

// Scan diagnostics for the alternating-coinciding family: one candidate per
// change point c (the start is forced for each c), with the per-candidate
// existence conditions.
struct AltCoincidingCandidateReport {
    int start_t = 0;
    int change_c = 0;
    bool low_deviation_ok = false;
    bool change_deviation_ok = false;
    bool change_weights_positive = false;
    bool feasible = false;
};

struct AltCoincidingScan {
    std::vector<AltCoincidingCandidateReport> candidates;
    std::vector<EquilibriumSolution> solutions;
};

AltCoincidingScan alt_coinciding_scan(const ProbabilitySchedule& s);

std::vector<EquilibriumSolution> alt_coinciding_equilibria(const ProbabilitySchedule& s);

// Relation between the coinciding start T* and the alternating start T~*:
// for convex schedules, T~* = T* when K - T* is odd and T~* in {T*-1, T*+1}
// otherwise; for every schedule T* <= T~* + 1.
struct StartRelations {
    bool convex = false;
    int t_star = 0;
    int t_star_alternating = 0;
    bool parity_relation_holds = false;  // convex schedules only
    bool general_bound_holds = false;
};

StartRelations tstar_relations_check(const ProbabilitySchedule& s);

}  // namespace qrace
