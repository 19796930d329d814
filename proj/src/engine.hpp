#pragma once

#include <vector>

#include "ocn/candidates.hpp"
#include "ocn/solver.hpp"

namespace ocn::internal {

// Depth-first branch and bound over the path/wavelength/aggregation option
// space described by a CandidateSet. An empty group list makes this a plain
// routing-and-wavelength-assignment search. Used by both exact solvers.
//
// Search shape: demands are processed in instance order; at each node the
// first unassigned demand is given either one of its candidate paths or one
// of its aggregation candidates (partner still unassigned), with a wavelength.
// Wavelength symmetry is broken canonically: a fresh wavelength must be the
// lowest unused index, which preserves the optimal cost. The bound at a node
// is the assigned cost plus, for the remaining demands, the sum of their
// shortest-path hops minus a maximum-weight matching of their remaining
// aggregation savings. Seeds provide the initial incumbent; the returned
// optimum is the first one reached in canonical exploration order, making the
// result deterministic for a given instance.
SolveResult branch_and_bound(const Instance& instance, const CandidateSet& candidates,
                             const SolveLimits& limits, std::vector<Solution> seeds);

}  // namespace ocn::internal
