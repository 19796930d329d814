#pragma once

#include <cstdint>

#include "ocn/model.hpp"

namespace ocn {

// Two-to-all traffic sample: two distinct source nodes are drawn uniformly
// with a deterministic seeded generator, and each sends one unit demand to
// every other node (2*(N-1) demands; a destination is excluded only for its
// own source, so the two sources also exchange demands). Demand ids are
// sequential from 0, destinations in declared node order, first source's
// block first. Identical (topology, seed) always yields the identical list.
// Requires at least 3 nodes.
std::vector<Demand> generate_two_to_all(const Topology& topology, std::uint64_t seed);

}  // namespace ocn
