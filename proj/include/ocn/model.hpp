#pragma once

#include <unordered_map>
#include <vector>

#include "ocn/topology.hpp"

namespace ocn {

// A wavelength channel carries one symbol stream; aggregation adds the bits
// per symbol of its two inputs (QPSK + QPSK -> 16-QAM).
enum class ModulationFormat { kQpsk, kSixteenQam };

int bits_per_symbol(ModulationFormat format);
const char* to_string(ModulationFormat format);

// The only supported combination is QPSK + QPSK -> 16-QAM; anything else throws.
ModulationFormat aggregate_format(ModulationFormat a, ModulationFormat b);

// One unit-rate connection request. Carried alone it occupies exactly one
// wavelength channel end to end; rate_gbps is descriptive metadata.
struct Demand {
  int id = 0;
  NodeId source = -1;
  NodeId destination = -1;
  int rate_gbps = 400;
  ModulationFormat format = ModulationFormat::kQpsk;
};

// A demand-pair aggregation opportunity: both demands reach aggregation_node
// on their own tributary lightpaths (zero-link when the source already is the
// aggregation node) and continue to the shared destination as one aggregate
// lightpath. All three lightpaths share a single wavelength, so the
// tributaries must be link-disjoint from each other and from the aggregate.
struct AggregationCandidate {
  int demand_a = 0;
  int demand_b = 0;
  NodeId aggregation_node = -1;
  std::vector<NodeId> tributary_a;     // source(a) .. aggregation_node
  std::vector<NodeId> tributary_b;     // source(b) .. aggregation_node
  std::vector<NodeId> aggregate_path;  // aggregation_node .. shared destination

  int total_links() const {
    return path_hops(tributary_a) + path_hops(tributary_b) + path_hops(aggregate_path);
  }
};

// One demand carried end to end on its own lightpath.
struct AloneAssignment {
  int demand_id = 0;
  std::vector<NodeId> path;
  int wavelength = 0;
};

// Two demands carried via aggregation. The three wavelength fields exist so a
// malformed state is representable (the verifier reports it); valid groups
// keep them equal. Use from_candidate to build a consistent group.
struct GroupAssignment {
  int demand_a = 0;
  int demand_b = 0;
  NodeId aggregation_node = -1;
  std::vector<NodeId> tributary_a;
  std::vector<NodeId> tributary_b;
  std::vector<NodeId> aggregate_path;
  int wavelength_tributary_a = 0;
  int wavelength_tributary_b = 0;
  int wavelength_aggregate = 0;

  static GroupAssignment from_candidate(const AggregationCandidate& candidate, int wavelength);
  int wavelength() const { return wavelength_aggregate; }
  int total_links() const {
    return path_hops(tributary_a) + path_hops(tributary_b) + path_hops(aggregate_path);
  }
};

// Complete per-demand provisioning: every demand appears exactly once, either
// alone or as a member of one aggregation group.
struct Solution {
  std::vector<AloneAssignment> alone;
  std::vector<GroupAssignment> groups;

  bool empty() const { return alone.empty() && groups.empty(); }
};

// An all-optical channel on one wavelength. Groups expand to three lightpaths:
// two QPSK tributaries and one 16-QAM aggregate carrying both demands.
struct Lightpath {
  std::vector<NodeId> path;
  int wavelength = 0;
  ModulationFormat format = ModulationFormat::kQpsk;
  std::vector<int> carried_demands;
};

std::vector<Lightpath> solution_lightpaths(const Solution& solution);

// Spectral cost of a solution. wavelength_links counts occupied
// (link, wavelength) pairs; distinct_wavelengths counts distinct indices used.
struct Metrics {
  int wavelength_links = 0;
  int distinct_wavelengths = 0;

  bool operator==(const Metrics&) const = default;
};

Metrics solution_metrics(const Solution& solution);

// Percentage reduction of rwca_cost versus bypass_cost. Requires
// bypass_cost >= rwca_cost >= 0 and bypass_cost > 0 (throws otherwise).
double relative_gain(long long bypass_cost, long long rwca_cost);

// A solvable problem: topology, demand set, candidate-path depth, and the
// number of wavelength channels per link.
struct Instance {
  Topology topology;
  std::vector<Demand> demands;
  int k_paths = 3;
  int wavelength_capacity = 1;

  // Validates and builds. wavelength_capacity 0 means "auto": one wavelength
  // per demand, which always admits a feasible bypass solution.
  static Instance create(Topology topology, std::vector<Demand> demands,
                         int k_paths = 3, int wavelength_capacity = 0);

  int demand_index(int demand_id) const;  // -1 when unknown
  const Demand& demand_by_id(int demand_id) const;

 private:
  std::unordered_map<int, int> id_to_index_;
};

}  // namespace ocn
