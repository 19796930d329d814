#pragma once

#include <limits>
#include <optional>

#include "ocn/model.hpp"

namespace ocn {

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kLimitExceeded };

const char* to_string(SolveStatus status);

// Search budgets. Both must be positive; the time budget is wall-clock and
// checked every few hundred search nodes, the node budget is deterministic.
struct SolveLimits {
  double time_budget_seconds = 300.0;
  long long node_budget = std::numeric_limits<long long>::max();
};

struct SolveResult {
  std::optional<Solution> solution;
  SolveStatus status = SolveStatus::kInfeasible;
  double lower_bound = 0.0;
  long long explored_nodes = 0;
  double wall_seconds = 0.0;

  // Wavelength-link cost of the carried solution; requires a solution.
  int cost() const { return solution_metrics(*solution).wavelength_links; }
};

}  // namespace ocn
