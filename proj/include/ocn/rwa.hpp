#pragma once

#include "ocn/solver.hpp"

namespace ocn {

enum class FirstFitOrdering { kById, kByLongestPath };

// Exact optical-bypass provisioning: every demand is carried alone on one of
// its k candidate paths with one wavelength and no (link, wavelength) is used
// twice. Minimizes total wavelength-links by branch and bound; the reported
// optimum is deterministic. Returns Infeasible when no clash-free assignment
// exists within the instance's wavelength capacity, LimitExceeded with the
// best incumbent and a valid lower bound when a budget runs out.
SolveResult solve_rwa_exact(const Instance& instance, const SolveLimits& limits = {});

// Fast bypass baseline: route each demand on its first candidate path and
// give it the lowest clash-free wavelength. kById processes demands in
// instance order; kByLongestPath longest route first. Never fails when the
// wavelength capacity is at least the demand count; returns nullopt when some
// demand cannot be placed.
std::optional<Solution> solve_rwa_first_fit(const Instance& instance,
                                            FirstFitOrdering ordering = FirstFitOrdering::kById);

}  // namespace ocn
