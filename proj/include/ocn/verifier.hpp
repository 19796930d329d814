#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocn/model.hpp"

namespace ocn {

enum class ViolationKind {
  kUnassignedDemand,
  kDuplicateAssignment,
  kNonSimplePath,
  kWrongEndpoints,
  kWavelengthClash,
  kWavelengthOutOfRange,
  kGroupWavelengthMismatch,
  kGroupDestinationMismatch,
  kGroupNodeIsDestination,
  kTributaryOverlap,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;  // names every entity involved
};

struct VerifyResult {
  std::vector<Violation> violations;
  std::optional<Metrics> metrics;  // present iff violations is empty

  bool ok() const { return violations.empty(); }
};

// Solver-independent check of every solution invariant: demand coverage,
// path validity and endpoints, wavelength ranges, per-group rules, and global
// (link, wavelength) exclusivity. Collects the complete violation list rather
// than stopping at the first problem; on success the metrics are recomputed
// from the occupied (link, wavelength) set, independently of
// solution_metrics. Lightpaths whose own path checks fail are left out of the
// occupancy scan so one malformed path does not cascade into spurious clashes.
VerifyResult verify_solution(const Instance& instance, const Solution& solution);

}  // namespace ocn
