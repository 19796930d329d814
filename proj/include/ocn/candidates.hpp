#pragma once

#include <vector>

#include "ocn/model.hpp"

namespace ocn {

// The option universe a solver searches over: per demand the k candidate
// end-to-end paths, plus every valid aggregation candidate. Enumeration order
// is deterministic for a given instance, and lists are duplicate-free.
struct CandidateSet {
  std::vector<std::vector<std::vector<NodeId>>> alone_paths;  // [demand index][rank]
  std::vector<AggregationCandidate> groups;
};

// Builds the candidate set for an instance. For every unordered demand pair
// sharing a destination t and every node v != t, tributaries are drawn from
// the k shortest paths source->v (a single-node path when source == v) and
// the aggregate from the k shortest paths v->t. Combinations whose
// tributaries share a link, or whose tributary repeats an aggregate link,
// are filtered out.
CandidateSet enumerate_aggregation_candidates(const Instance& instance);

// Checks a caller-supplied candidate set against the instance: one path list
// per demand, known demand ids, shared destinations, and structurally valid
// paths with the right endpoints. Throws ValidationError on the first
// offender. Solvers run this before trusting a set they did not build.
void validate_candidate_set(const Instance& instance, const CandidateSet& candidates);

}  // namespace ocn
