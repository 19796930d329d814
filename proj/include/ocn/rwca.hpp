#pragma once

#include "ocn/candidates.hpp"
#include "ocn/solver.hpp"

namespace ocn {

// Exact routing, wavelength and computing assignment: each demand is carried
// alone on one of its k candidate paths, or covered by exactly one selected
// aggregation candidate; a selected group occupies every link of both
// tributaries and the aggregate path on one common wavelength. Minimizes
// total wavelength-links over the candidate set by branch and bound.
SolveResult solve_rwca_exact(const Instance& instance, const SolveLimits& limits = {});

// Same, over a caller-supplied candidate set (an empty group list reduces the
// model to plain routing and wavelength assignment).
SolveResult solve_rwca_exact(const Instance& instance, const CandidateSet& candidates,
                             const SolveLimits& limits = {});

// Greedy aggregation heuristic: pair demands by descending wavelength-link
// saving (each demand joins at most one group), route leftovers on their
// first candidate path, then assign wavelengths first-fit, groups first by
// descending size. Requires wavelength capacity >= demand count, which makes
// the first-fit pass always succeed.
Solution solve_rwca_heuristic(const Instance& instance);
Solution solve_rwca_heuristic(const Instance& instance, const CandidateSet& candidates);

// Certified lower bound on the optimal wavelength-link cost:
// sum of shortest-path hops minus a maximum-weight matching over
// shared-destination demand pairs, where a pair's weight is the best
// aggregation saving achievable with free routing. Never exceeds the exact
// optimum.
double rwca_lower_bound(const Instance& instance);

}  // namespace ocn
