#include "ocn/traffic.hpp"

namespace ocn {

std::vector<Demand> generate_two_to_all(const Topology& topology, std::uint64_t seed) {
  const int n = topology.node_count();
  if (n < 3) {
    throw ValidationError("two-to-all traffic requires at least 3 nodes, topology \"" +
                          topology.name() + "\" has " + std::to_string(n));
  }
  SplitMix64 rng(seed);
  const NodeId first = static_cast<NodeId>(rng.below(n));
  NodeId second = static_cast<NodeId>(rng.below(n - 1));
  if (second >= first) ++second;

  std::vector<Demand> demands;
  demands.reserve(2 * (n - 1));
  int id = 0;
  for (NodeId source : {first, second}) {
    for (NodeId dest = 0; dest < n; ++dest) {
      if (dest == source) continue;
      Demand d;
      d.id = id++;
      d.source = source;
      d.destination = dest;
      demands.push_back(d);
    }
  }
  return demands;
}

}  // namespace ocn
