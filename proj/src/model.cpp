#include "ocn/model.hpp"

#include <set>
#include <string>

namespace ocn {

int bits_per_symbol(ModulationFormat format) {
  return format == ModulationFormat::kQpsk ? 2 : 4;
}

const char* to_string(ModulationFormat format) {
  return format == ModulationFormat::kQpsk ? "QPSK" : "16QAM";
}

ModulationFormat aggregate_format(ModulationFormat a, ModulationFormat b) {
  if (a != ModulationFormat::kQpsk || b != ModulationFormat::kQpsk) {
    throw ValidationError("aggregation is defined for two QPSK lightpaths only");
  }
  return ModulationFormat::kSixteenQam;
}

GroupAssignment GroupAssignment::from_candidate(const AggregationCandidate& candidate,
                                                int wavelength) {
  GroupAssignment group;
  group.demand_a = candidate.demand_a;
  group.demand_b = candidate.demand_b;
  group.aggregation_node = candidate.aggregation_node;
  group.tributary_a = candidate.tributary_a;
  group.tributary_b = candidate.tributary_b;
  group.aggregate_path = candidate.aggregate_path;
  group.wavelength_tributary_a = wavelength;
  group.wavelength_tributary_b = wavelength;
  group.wavelength_aggregate = wavelength;
  return group;
}

std::vector<Lightpath> solution_lightpaths(const Solution& solution) {
  std::vector<Lightpath> out;
  out.reserve(solution.alone.size() + 3 * solution.groups.size());
  for (const auto& a : solution.alone) {
    out.push_back(Lightpath{a.path, a.wavelength, ModulationFormat::kQpsk, {a.demand_id}});
  }
  for (const auto& g : solution.groups) {
    out.push_back(Lightpath{g.tributary_a, g.wavelength_tributary_a,
                            ModulationFormat::kQpsk, {g.demand_a}});
    out.push_back(Lightpath{g.tributary_b, g.wavelength_tributary_b,
                            ModulationFormat::kQpsk, {g.demand_b}});
    out.push_back(Lightpath{g.aggregate_path, g.wavelength_aggregate,
                            ModulationFormat::kSixteenQam, {g.demand_a, g.demand_b}});
  }
  return out;
}

Metrics solution_metrics(const Solution& solution) {
  Metrics metrics;
  std::set<int> wavelengths;
  for (const auto& lp : solution_lightpaths(solution)) {
    const int hops = path_hops(lp.path);
    metrics.wavelength_links += hops;
    if (hops > 0) wavelengths.insert(lp.wavelength);
  }
  metrics.distinct_wavelengths = static_cast<int>(wavelengths.size());
  return metrics;
}

double relative_gain(long long bypass_cost, long long rwca_cost) {
  if (bypass_cost == 0) {
    throw ValidationError("relative gain is undefined for bypass cost 0");
  }
  if (bypass_cost < 0 || rwca_cost < 0 || rwca_cost > bypass_cost) {
    throw ValidationError("relative gain requires bypass_cost >= rwca_cost >= 0, got " +
                          std::to_string(bypass_cost) + " and " + std::to_string(rwca_cost));
  }
  return 100.0 * static_cast<double>(bypass_cost - rwca_cost) /
         static_cast<double>(bypass_cost);
}

Instance Instance::create(Topology topology, std::vector<Demand> demands,
                          int k_paths, int wavelength_capacity) {
  if (k_paths < 1) {
    throw ValidationError("instance: k_paths must be >= 1");
  }
  if (wavelength_capacity == 0) {
    wavelength_capacity = std::max<int>(1, static_cast<int>(demands.size()));
  }
  if (wavelength_capacity < 1) {
    throw ValidationError("instance: wavelength capacity must be >= 1");
  }

  Instance instance;
  instance.topology = std::move(topology);
  instance.k_paths = k_paths;
  instance.wavelength_capacity = wavelength_capacity;

  const int n = instance.topology.node_count();
  for (const auto& d : demands) {
    if (d.source < 0 || d.source >= n || d.destination < 0 || d.destination >= n) {
      throw ValidationError("instance: demand " + std::to_string(d.id) +
                            " references a node outside the topology");
    }
    if (d.source == d.destination) {
      throw ValidationError("instance: demand " + std::to_string(d.id) +
                            " has equal source and destination");
    }
    const int index = static_cast<int>(instance.demands.size());
    if (!instance.id_to_index_.emplace(d.id, index).second) {
      throw ValidationError("instance: duplicate demand id " + std::to_string(d.id));
    }
    instance.demands.push_back(d);
  }
  return instance;
}

int Instance::demand_index(int demand_id) const {
  auto it = id_to_index_.find(demand_id);
  return it == id_to_index_.end() ? -1 : it->second;
}

const Demand& Instance::demand_by_id(int demand_id) const {
  const int index = demand_index(demand_id);
  if (index < 0) {
    throw ValidationError("instance: unknown demand id " + std::to_string(demand_id));
  }
  return demands[index];
}

}  // namespace ocn
