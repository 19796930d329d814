#include "ocn/topology.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>

namespace ocn {

std::string format_fixed(double value, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

Topology Topology::build(std::string name, std::vector<std::string> nodes,
                         std::vector<std::pair<std::string, std::string>> links) {
  if (nodes.empty()) {
    throw ValidationError("topology \"" + name + "\": node list is empty");
  }
  if (links.empty()) {
    throw ValidationError("topology \"" + name + "\": link list is empty");
  }

  Topology topo;
  topo.name_ = std::move(name);

  std::map<std::string, NodeId> index;
  for (const auto& node : nodes) {
    if (node.empty()) {
      throw ValidationError("topology \"" + topo.name_ + "\": empty node identifier");
    }
    if (!index.emplace(node, static_cast<NodeId>(topo.node_names_.size())).second) {
      throw ValidationError("topology \"" + topo.name_ + "\": duplicate node \"" + node + "\"");
    }
    topo.node_names_.push_back(node);
  }

  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [a, b] : links) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) {
      throw ValidationError("topology \"" + topo.name_ + "\": link endpoint \"" + a +
                            "\" is not a declared node");
    }
    if (ib == index.end()) {
      throw ValidationError("topology \"" + topo.name_ + "\": link endpoint \"" + b +
                            "\" is not a declared node");
    }
    if (ia->second == ib->second) {
      throw ValidationError("topology \"" + topo.name_ + "\": self-loop link " + a + "-" + b);
    }
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) {
      throw ValidationError("topology \"" + topo.name_ + "\": duplicate link " + a + "-" + b);
    }
    topo.links_.push_back(Link{ia->second, ib->second});
  }

  topo.adjacency_.assign(topo.node_names_.size(), {});
  for (LinkId id = 0; id < topo.link_count(); ++id) {
    const Link& l = topo.links_[id];
    topo.adjacency_[l.u].emplace_back(l.v, id);
    topo.adjacency_[l.v].emplace_back(l.u, id);
  }
  for (auto& adj : topo.adjacency_) {
    std::sort(adj.begin(), adj.end());
  }

  auto dist = bfs_hop_distances(topo, 0);
  for (NodeId n = 0; n < topo.node_count(); ++n) {
    if (dist[n] < 0) {
      throw ValidationError("topology \"" + topo.name_ + "\": disconnected, node \"" +
                            topo.node_names_[n] + "\" is unreachable from \"" +
                            topo.node_names_[0] + "\"");
    }
  }
  return topo;
}

std::optional<NodeId> Topology::find_node(std::string_view name) const {
  for (NodeId n = 0; n < node_count(); ++n) {
    if (node_names_[n] == name) return n;
  }
  return std::nullopt;
}

NodeId Topology::node_or_throw(std::string_view name) const {
  if (auto n = find_node(name)) return *n;
  throw ValidationError("topology \"" + name_ + "\": unknown node \"" + std::string(name) + "\"");
}

std::optional<LinkId> Topology::find_link(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) return std::nullopt;
  for (const auto& [nb, id] : adjacency_[a]) {
    if (nb == b) return id;
  }
  return std::nullopt;
}

std::string Topology::link_label(LinkId id) const {
  const Link& l = links_[id];
  return node_names_[l.u] + "-" + node_names_[l.v];
}

std::vector<int> bfs_hop_distances(const Topology& topology, NodeId source) {
  std::vector<int> dist(topology.node_count(), -1);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    for (const auto& [nb, link] : topology.neighbors(cur)) {
      if (dist[nb] < 0) {
        dist[nb] = dist[cur] + 1;
        queue.push_back(nb);
      }
    }
  }
  return dist;
}

bool is_simple_path(const std::vector<NodeId>& path) {
  if (path.empty()) return false;
  std::set<NodeId> seen(path.begin(), path.end());
  return seen.size() == path.size();
}

int path_hops(const std::vector<NodeId>& path) {
  return path.empty() ? 0 : static_cast<int>(path.size()) - 1;
}

std::optional<std::vector<LinkId>> path_links(const Topology& topology,
                                              const std::vector<NodeId>& path) {
  std::vector<LinkId> out;
  out.reserve(path.size());
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto id = topology.find_link(path[i - 1], path[i]);
    if (!id) return std::nullopt;
    out.push_back(*id);
  }
  return out;
}

}  // namespace ocn
