#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocn/common.hpp"

namespace ocn {

// Nodes and links are referenced by dense indices. NodeId is the position of
// the node in the topology's declared node list; LinkId is the position of
// the link in the declared link list. All determinism guarantees (path
// ordering, candidate ordering) are relative to these declared orders.
using NodeId = int;
using LinkId = int;

struct Link {
  NodeId u = -1;
  NodeId v = -1;
};

// Undirected, connected, simple graph of optical nodes and fiber links.
// Immutable after construction; safe to share across threads.
class Topology {
 public:
  // Empty placeholder; every populated Topology comes from build().
  Topology() = default;

  // Validates and builds. Throws ValidationError naming the offender for
  // empty lists, duplicate nodes, unknown link endpoints, self-loops,
  // duplicate links, or a disconnected graph.
  static Topology build(std::string name, std::vector<std::string> nodes,
                        std::vector<std::pair<std::string, std::string>> links);

  const std::string& name() const { return name_; }
  int node_count() const { return static_cast<int>(node_names_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }

  const std::string& node_name(NodeId n) const { return node_names_[n]; }
  const std::vector<std::string>& node_names() const { return node_names_; }
  std::optional<NodeId> find_node(std::string_view name) const;
  NodeId node_or_throw(std::string_view name) const;

  const Link& link(LinkId id) const { return links_[id]; }
  const std::vector<Link>& links() const { return links_; }
  std::optional<LinkId> find_link(NodeId a, NodeId b) const;
  std::string link_label(LinkId id) const;

  // Neighbors of n as (neighbor, link id), sorted by neighbor index.
  const std::vector<std::pair<NodeId, LinkId>>& neighbors(NodeId n) const {
    return adjacency_[n];
  }

 private:
  std::string name_;
  std::vector<std::string> node_names_;
  std::vector<Link> links_;
  std::vector<std::vector<std::pair<NodeId, LinkId>>> adjacency_;
};

// Hop distance from source to every node (graph is connected, so all finite).
std::vector<int> bfs_hop_distances(const Topology& topology, NodeId source);

// Paths are node sequences. A single-node sequence is a valid zero-link path
// (used for tributaries that start at the aggregation node).
bool is_simple_path(const std::vector<NodeId>& path);
int path_hops(const std::vector<NodeId>& path);

// Link ids along the path, or nullopt if some hop has no link in the topology.
std::optional<std::vector<LinkId>> path_links(const Topology& topology,
                                              const std::vector<NodeId>& path);

// Up to k distinct simple paths from s to t, ordered by (hop count, then
// lexicographic node sequence). The returned list is the k smallest paths
// under that total order, so output is fully deterministic. Requires s != t.
std::vector<std::vector<NodeId>> k_shortest_paths(const Topology& topology,
                                                  NodeId s, NodeId t, int k);

}  // namespace ocn
