#pragma once

#include "ocn/solver.hpp"

namespace ocn {

// Size guard for the exhaustive optimizer; larger inputs are refused.
struct OracleCaps {
  int max_nodes = 6;
  int max_demands = 4;
  int max_wavelengths = 4;
};

enum class OracleMode { kBypass, kRwca };

// Every simple path between two distinct nodes, enumerated by depth-first
// search in neighbor order. Exponential; intended for tiny graphs and as an
// independent reference for the k-shortest-path routine.
std::vector<std::vector<NodeId>> all_simple_paths(const Topology& topology, NodeId s, NodeId t);

// Ground-truth optimizer: exhausts every pairing (Rwca mode), every simple
// path combination and every wavelength assignment, accepting exactly what
// verify_solution accepts, and returns the true minimum wavelength-link cost.
// Ignores the instance's k_paths (the path universe is all simple paths) but
// honors its wavelength capacity. Shares no code with the solvers beyond the
// core types and the verifier. Throws ValidationError when the instance
// exceeds the caps; returns Infeasible when nothing verifies.
SolveResult brute_force_optimum(const Instance& instance, const OracleCaps& caps = {},
                                OracleMode mode = OracleMode::kRwca);

}  // namespace ocn
