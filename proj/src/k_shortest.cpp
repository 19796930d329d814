#include <algorithm>
#include <queue>

#include "ocn/topology.hpp"

namespace ocn {
namespace {

// Partial simple path plus an admissible completion estimate. f is the hop
// count of the best possible completion (current hops + BFS distance to t),
// so popping entries in (f, node sequence) order yields complete paths in
// exact (hop count, lexicographic) order.
struct PartialPath {
  int f = 0;
  std::vector<NodeId> nodes;
};

struct PartialPathAfter {
  bool operator()(const PartialPath& a, const PartialPath& b) const {
    if (a.f != b.f) return a.f > b.f;
    return a.nodes > b.nodes;
  }
};

}  // namespace

std::vector<std::vector<NodeId>> k_shortest_paths(const Topology& topology,
                                                  NodeId s, NodeId t, int k) {
  if (s == t) {
    throw ValidationError("k_shortest_paths: source equals destination (\"" +
                          topology.node_name(s) + "\")");
  }
  if (s < 0 || t < 0 || s >= topology.node_count() || t >= topology.node_count()) {
    throw ValidationError("k_shortest_paths: endpoint out of range");
  }
  if (k < 1) {
    throw ValidationError("k_shortest_paths: k must be >= 1");
  }

  const std::vector<int> to_target = bfs_hop_distances(topology, t);

  std::priority_queue<PartialPath, std::vector<PartialPath>, PartialPathAfter> frontier;
  frontier.push(PartialPath{to_target[s], {s}});

  std::vector<std::vector<NodeId>> result;
  while (!frontier.empty() && static_cast<int>(result.size()) < k) {
    PartialPath cur = frontier.top();
    frontier.pop();
    const NodeId tail = cur.nodes.back();
    if (tail == t) {
      result.push_back(std::move(cur.nodes));
      continue;
    }
    for (const auto& [nb, link] : topology.neighbors(tail)) {
      if (std::find(cur.nodes.begin(), cur.nodes.end(), nb) != cur.nodes.end()) {
        continue;  // keep the path simple
      }
      PartialPath ext;
      ext.nodes = cur.nodes;
      ext.nodes.push_back(nb);
      ext.f = path_hops(ext.nodes) + to_target[nb];
      frontier.push(std::move(ext));
    }
  }
  return result;
}

}  // namespace ocn
