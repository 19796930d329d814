#include "ocn/candidates.hpp"

#include <algorithm>
#include <map>

namespace ocn {
namespace {

std::vector<LinkId> sorted_links(const Topology& topo, const std::vector<NodeId>& path) {
  auto links = path_links(topo, path);
  std::sort(links->begin(), links->end());
  return *links;
}

bool disjoint(const std::vector<LinkId>& a, const std::vector<LinkId>& b) {
  auto it = a.begin();
  for (LinkId x : b) {
    it = std::lower_bound(it, a.end(), x);
    if (it != a.end() && *it == x) return false;
  }
  return true;
}

}  // namespace

void validate_candidate_set(const Instance& instance, const CandidateSet& candidates) {
  const Topology& topo = instance.topology;
  const int m = static_cast<int>(instance.demands.size());
  if (static_cast<int>(candidates.alone_paths.size()) != m) {
    throw ValidationError("candidate set: expected one path list per demand");
  }
  auto check_path = [&](const std::vector<NodeId>& path, NodeId from, NodeId to,
                        const std::string& what) {
    if (path.empty() || !is_simple_path(path) || !path_links(topo, path)) {
      throw ValidationError("candidate set: " + what + " is not a simple path in the topology");
    }
    if (path.front() != from || path.back() != to) {
      throw ValidationError("candidate set: " + what + " has wrong endpoints");
    }
  };
  for (int d = 0; d < m; ++d) {
    const Demand& demand = instance.demands[d];
    for (const auto& path : candidates.alone_paths[d]) {
      check_path(path, demand.source, demand.destination,
                 "path for demand " + std::to_string(demand.id));
    }
  }
  for (std::size_t c = 0; c < candidates.groups.size(); ++c) {
    const AggregationCandidate& cand = candidates.groups[c];
    const std::string what = "aggregation candidate #" + std::to_string(c);
    const int ia = instance.demand_index(cand.demand_a);
    const int ib = instance.demand_index(cand.demand_b);
    if (ia < 0 || ib < 0 || ia == ib) {
      throw ValidationError("candidate set: " + what + " names invalid demands");
    }
    const Demand& da = instance.demands[ia];
    const Demand& db = instance.demands[ib];
    if (da.destination != db.destination) {
      throw ValidationError("candidate set: " + what + " pairs different destinations");
    }
    if (cand.aggregation_node == da.destination) {
      throw ValidationError("candidate set: " + what + " aggregates at the destination");
    }
    check_path(cand.tributary_a, da.source, cand.aggregation_node, what + " tributary a");
    check_path(cand.tributary_b, db.source, cand.aggregation_node, what + " tributary b");
    check_path(cand.aggregate_path, cand.aggregation_node, da.destination,
               what + " aggregate");
    if (cand.aggregate_path.size() < 2) {
      throw ValidationError("candidate set: " + what + " aggregate path has no links");
    }
    const auto la = sorted_links(topo, cand.tributary_a);
    const auto lb = sorted_links(topo, cand.tributary_b);
    const auto lagg = sorted_links(topo, cand.aggregate_path);
    if (!disjoint(la, lb) || !disjoint(la, lagg) || !disjoint(lb, lagg)) {
      throw ValidationError("candidate set: " + what + " repeats a link across lightpaths");
    }
  }
}

CandidateSet enumerate_aggregation_candidates(const Instance& instance) {
  const Topology& topo = instance.topology;
  const int m = static_cast<int>(instance.demands.size());

  CandidateSet set;
  set.alone_paths.resize(m);
  for (int i = 0; i < m; ++i) {
    const Demand& d = instance.demands[i];
    set.alone_paths[i] = k_shortest_paths(topo, d.source, d.destination, instance.k_paths);
  }

  // Tributary/aggregate path lists are shared across pairs; cache per endpoint pair.
  std::map<std::pair<NodeId, NodeId>, std::vector<std::vector<NodeId>>> cache;
  auto paths_between = [&](NodeId from, NodeId to) -> const std::vector<std::vector<NodeId>>& {
    auto [it, inserted] = cache.try_emplace({from, to});
    if (inserted) {
      if (from == to) {
        it->second = {{from}};
      } else {
        it->second = k_shortest_paths(topo, from, to, instance.k_paths);
      }
    }
    return it->second;
  };

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Demand& a = instance.demands[i];
      const Demand& b = instance.demands[j];
      if (a.destination != b.destination) continue;
      const NodeId t = a.destination;

      for (NodeId v = 0; v < topo.node_count(); ++v) {
        if (v == t) continue;
        const auto& tribs_a = paths_between(a.source, v);
        const auto& tribs_b = paths_between(b.source, v);
        const auto& aggregates = paths_between(v, t);
        for (const auto& ta : tribs_a) {
          const auto la = sorted_links(topo, ta);
          for (const auto& tb : tribs_b) {
            const auto lb = sorted_links(topo, tb);
            if (!disjoint(la, lb)) continue;
            for (const auto& agg : aggregates) {
              const auto lagg = sorted_links(topo, agg);
              if (!disjoint(la, lagg) || !disjoint(lb, lagg)) continue;
              set.groups.push_back(
                  AggregationCandidate{a.id, b.id, v, ta, tb, agg});
            }
          }
        }
      }
    }
  }
  return set;
}

}  // namespace ocn
