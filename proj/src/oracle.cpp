#include "ocn/oracle.hpp"

#include <algorithm>
#include <map>

#include "ocn/verifier.hpp"

namespace ocn {
namespace {

struct Option {
  int cost = 0;
  std::vector<LinkId> links;  // sorted, for conflict tests
  // Alone payload.
  std::vector<NodeId> path;
  // Pair payload.
  NodeId aggregation_node = -1;
  std::vector<NodeId> tributary_a, tributary_b, aggregate_path;
};

struct Item {
  bool pair = false;
  int index_a = -1;  // demand indices
  int index_b = -1;
  std::vector<Option> options;  // sorted by cost, enumeration order within ties
};

bool links_disjoint(const std::vector<LinkId>& a, const std::vector<LinkId>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? ++i : ++j;
  }
  return true;
}

class Oracle {
 public:
  Oracle(const Instance& instance, OracleMode mode)
      : instance_(instance), topo_(instance.topology), mode_(mode) {}

  SolveResult run() {
    SolveResult result;
    const int m = static_cast<int>(instance_.demands.size());
    if (m == 0) {
      result.solution = Solution{};
      result.status = SolveStatus::kOptimal;
      return result;
    }

    pairing_.assign(m, -1);
    enumerate_pairings(0);

    result.explored_nodes = explored_;
    if (best_solution_) {
      auto verdict = verify_solution(instance_, *best_solution_);
      if (!verdict.ok()) {
        throw std::logic_error("oracle produced a solution the verifier rejects");
      }
      result.solution = std::move(best_solution_);
      result.status = SolveStatus::kOptimal;
      result.lower_bound = static_cast<double>(best_cost_);
    } else {
      result.status = SolveStatus::kInfeasible;
    }
    return result;
  }

 private:
  const std::vector<std::vector<NodeId>>& paths_between(NodeId from, NodeId to) {
    auto [it, inserted] = path_cache_.try_emplace({from, to});
    if (inserted) {
      it->second = from == to ? std::vector<std::vector<NodeId>>{{from}}
                              : all_simple_paths(topo_, from, to);
    }
    return it->second;
  }

  std::vector<LinkId> sorted_links(const std::vector<NodeId>& path) const {
    auto links = path_links(topo_, path);
    std::sort(links->begin(), links->end());
    return *links;
  }

  // Picks a partner (or none) for the first unpaired demand; at a complete
  // pairing, evaluates every routing combination.
  void enumerate_pairings(int from) {
    const int m = static_cast<int>(instance_.demands.size());
    int i = from;
    while (i < m && pairing_[i] >= 0) ++i;
    if (i == m) {
      evaluate_pairing();
      return;
    }
    pairing_[i] = i;  // carried alone
    enumerate_pairings(i + 1);
    pairing_[i] = -1;
    if (mode_ == OracleMode::kBypass) return;
    for (int j = i + 1; j < m; ++j) {
      if (pairing_[j] >= 0) continue;
      if (instance_.demands[i].destination != instance_.demands[j].destination) continue;
      pairing_[i] = j;
      pairing_[j] = i;
      enumerate_pairings(i + 1);
      pairing_[i] = pairing_[j] = -1;
    }
  }

  std::vector<Option> alone_options(int d) {
    const Demand& demand = instance_.demands[d];
    std::vector<Option> options;
    for (const auto& path : paths_between(demand.source, demand.destination)) {
      Option option;
      option.cost = path_hops(path);
      option.links = sorted_links(path);
      option.path = path;
      options.push_back(std::move(option));
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& a, const Option& b) { return a.cost < b.cost; });
    return options;
  }

  std::vector<Option> pair_options(int a, int b) {
    const Demand& da = instance_.demands[a];
    const Demand& db = instance_.demands[b];
    const NodeId t = da.destination;
    std::vector<Option> options;
    for (NodeId v = 0; v < topo_.node_count(); ++v) {
      if (v == t) continue;
      for (const auto& ta : paths_between(da.source, v)) {
        const auto la = sorted_links(ta);
        for (const auto& tb : paths_between(db.source, v)) {
          const auto lb = sorted_links(tb);
          if (!links_disjoint(la, lb)) continue;
          for (const auto& agg : paths_between(v, t)) {
            const auto lagg = sorted_links(agg);
            if (!links_disjoint(la, lagg) || !links_disjoint(lb, lagg)) continue;
            Option option;
            option.cost = static_cast<int>(la.size() + lb.size() + lagg.size());
            option.links = la;
            option.links.insert(option.links.end(), lb.begin(), lb.end());
            option.links.insert(option.links.end(), lagg.begin(), lagg.end());
            std::sort(option.links.begin(), option.links.end());
            option.aggregation_node = v;
            option.tributary_a = ta;
            option.tributary_b = tb;
            option.aggregate_path = agg;
            options.push_back(std::move(option));
          }
        }
      }
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& x, const Option& y) { return x.cost < y.cost; });
    return options;
  }

  void evaluate_pairing() {
    const int m = static_cast<int>(instance_.demands.size());
    std::vector<Item> items;
    for (int d = 0; d < m; ++d) {
      if (pairing_[d] == d) {
        items.push_back(Item{false, d, -1, alone_options(d)});
      } else if (pairing_[d] > d) {
        Item item{true, d, pairing_[d], pair_options(d, pairing_[d])};
        if (item.options.empty()) return;  // this pairing cannot be routed
        items.push_back(std::move(item));
      }
    }

    std::vector<long long> suffix_min(items.size() + 1, 0);
    for (int i = static_cast<int>(items.size()) - 1; i >= 0; --i) {
      suffix_min[i] = suffix_min[i + 1] + items[i].options.front().cost;
    }

    chosen_.assign(items.size(), 0);
    route(items, suffix_min, 0, 0);
  }

  void route(const std::vector<Item>& items, const std::vector<long long>& suffix_min,
             std::size_t at, long long cost) {
    ++explored_;
    if (cost + suffix_min[at] >= best_cost_) return;
    if (at == items.size()) {
      std::vector<int> colors;
      if (colorable(items, colors)) accept(items, colors, cost);
      return;
    }
    for (std::size_t o = 0; o < items[at].options.size(); ++o) {
      const long long next = cost + items[at].options[o].cost;
      if (next + suffix_min[at + 1] >= best_cost_) break;  // options sorted by cost
      chosen_[at] = static_cast<int>(o);
      route(items, suffix_min, at + 1, next);
    }
  }

  // Proper coloring of the chosen lightpath bundles with at most W colors;
  // bundles conflict when they share a link. Fresh colors are taken in
  // first-use order, which loses no colorings.
  bool colorable(const std::vector<Item>& items, std::vector<int>& colors) const {
    const int k = static_cast<int>(items.size());
    colors.assign(k, -1);
    std::vector<std::vector<char>> conflict(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        conflict[i][j] = conflict[j][i] =
            !links_disjoint(items[i].options[chosen_[i]].links,
                            items[j].options[chosen_[j]].links);
      }
    }
    return color_from(conflict, colors, 0, 0);
  }

  bool color_from(const std::vector<std::vector<char>>& conflict, std::vector<int>& colors,
                  int at, int used) const {
    if (at == static_cast<int>(colors.size())) return true;
    const int cap = std::min(used, instance_.wavelength_capacity - 1);
    for (int c = 0; c <= cap; ++c) {
      bool free = true;
      for (int j = 0; j < at && free; ++j) {
        free = !(colors[j] == c && conflict[at][j]);
      }
      if (!free) continue;
      colors[at] = c;
      if (color_from(conflict, colors, at + 1, std::max(used, c + 1))) return true;
      colors[at] = -1;
    }
    return false;
  }

  void accept(const std::vector<Item>& items, const std::vector<int>& colors, long long cost) {
    Solution solution;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Item& item = items[i];
      const Option& option = item.options[chosen_[i]];
      if (item.pair) {
        AggregationCandidate cand{instance_.demands[item.index_a].id,
                                  instance_.demands[item.index_b].id,
                                  option.aggregation_node,
                                  option.tributary_a,
                                  option.tributary_b,
                                  option.aggregate_path};
        solution.groups.push_back(GroupAssignment::from_candidate(cand, colors[i]));
      } else {
        solution.alone.push_back(AloneAssignment{instance_.demands[item.index_a].id,
                                                 option.path, colors[i]});
      }
    }
    best_cost_ = cost;
    best_solution_ = std::move(solution);
  }

  const Instance& instance_;
  const Topology& topo_;
  OracleMode mode_;

  std::map<std::pair<NodeId, NodeId>, std::vector<std::vector<NodeId>>> path_cache_;
  std::vector<int> pairing_;
  std::vector<int> chosen_;

  long long best_cost_ = std::numeric_limits<long long>::max();
  std::optional<Solution> best_solution_;
  long long explored_ = 0;
};

}  // namespace

std::vector<std::vector<NodeId>> all_simple_paths(const Topology& topology, NodeId s, NodeId t) {
  if (s == t) {
    throw ValidationError("all_simple_paths: source equals destination");
  }
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack{s};
  std::vector<char> visited(topology.node_count(), 0);
  visited[s] = 1;

  // Explicit DFS with per-frame neighbor cursors.
  std::vector<std::size_t> cursor{0};
  while (!stack.empty()) {
    const NodeId tail = stack.back();
    const auto& nbs = topology.neighbors(tail);
    if (tail == t || cursor.back() >= nbs.size()) {
      if (tail == t) out.push_back(stack);
      visited[tail] = 0;
      stack.pop_back();
      cursor.pop_back();
      continue;
    }
    const NodeId next = nbs[cursor.back()].first;
    ++cursor.back();
    if (visited[next]) continue;
    visited[next] = 1;
    stack.push_back(next);
    cursor.push_back(0);
  }
  return out;
}

SolveResult brute_force_optimum(const Instance& instance, const OracleCaps& caps,
                                OracleMode mode) {
  if (caps.max_nodes <= 0 || caps.max_demands <= 0 || caps.max_wavelengths <= 0) {
    throw ValidationError("oracle caps must be positive");
  }
  if (instance.topology.node_count() > caps.max_nodes) {
    throw ValidationError("oracle caps exceeded: " +
                          std::to_string(instance.topology.node_count()) + " nodes > " +
                          std::to_string(caps.max_nodes));
  }
  if (static_cast<int>(instance.demands.size()) > caps.max_demands) {
    throw ValidationError("oracle caps exceeded: " + std::to_string(instance.demands.size()) +
                          " demands > " + std::to_string(caps.max_demands));
  }
  if (instance.wavelength_capacity > caps.max_wavelengths) {
    throw ValidationError("oracle caps exceeded: capacity " +
                          std::to_string(instance.wavelength_capacity) + " > " +
                          std::to_string(caps.max_wavelengths));
  }
  Oracle oracle(instance, mode);
  auto result = oracle.run();
  return result;
}

}  // namespace ocn
