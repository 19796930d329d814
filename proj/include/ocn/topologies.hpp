#pragma once

#include <optional>
#include <string_view>

#include "ocn/topology.hpp"

namespace ocn {

// Four-node star used throughout the tests and docs: A and B feed X, X feeds C.
Topology fig1_topology();

// Classic 14-node, 21-link NSFNET backbone.
Topology nsfnet_topology();

// 14-node, 23-link Indian intercity mesh (slightly denser than NSFNET).
// Like nsfnet, a stand-in of the usual literature flavor; benchmarks accept
// user-supplied topology files for exact reproductions.
Topology india_topology();

std::optional<Topology> builtin_topology(std::string_view name);
std::vector<std::string> builtin_topology_names();

}  // namespace ocn
