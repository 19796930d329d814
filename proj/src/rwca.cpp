#include "ocn/rwca.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "engine.hpp"
#include "ocn/rwa.hpp"

namespace ocn {
namespace {

// Exact maximum-weight matching by subset DP over one destination's demands;
// falls back to a safe overestimate past 16 members so the bound stays valid.
long long matching_value(const std::vector<int>& members,
                         const std::vector<std::vector<long long>>& weights) {
  const int s = static_cast<int>(members.size());
  if (s < 2) return 0;
  if (s > 16) {
    long long sum = 0;
    for (int i = 0; i < s; ++i) {
      long long best = 0;
      for (int j = 0; j < s; ++j) {
        if (j != i) best = std::max(best, weights[members[i]][members[j]]);
      }
      sum += best;
    }
    return sum / 2;
  }
  std::vector<long long> dp(std::size_t{1} << s, 0);
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const int i = std::countr_zero(mask);
    dp[mask] = dp[mask & (mask - 1)];
    for (int j = i + 1; j < s; ++j) {
      if (!(mask >> j & 1)) continue;
      const long long w = weights[members[i]][members[j]];
      if (w > 0) {
        dp[mask] =
            std::max(dp[mask], dp[mask ^ (std::size_t{1} << i) ^ (std::size_t{1} << j)] + w);
      }
    }
  }
  return dp.back();
}

Solution heuristic_impl(const Instance& instance, const CandidateSet& candidates);

SolveResult exact_impl(const Instance& instance, const CandidateSet& candidates,
                       const SolveLimits& limits) {
  std::vector<Solution> seeds;
  if (auto seed = solve_rwa_first_fit(instance)) seeds.push_back(std::move(*seed));
  if (!candidates.groups.empty() &&
      instance.wavelength_capacity >= static_cast<int>(instance.demands.size())) {
    seeds.push_back(heuristic_impl(instance, candidates));
  }
  return internal::branch_and_bound(instance, candidates, limits, std::move(seeds));
}

}  // namespace

SolveResult solve_rwca_exact(const Instance& instance, const SolveLimits& limits) {
  return exact_impl(instance, enumerate_aggregation_candidates(instance), limits);
}

SolveResult solve_rwca_exact(const Instance& instance, const CandidateSet& candidates,
                             const SolveLimits& limits) {
  validate_candidate_set(instance, candidates);
  return exact_impl(instance, candidates, limits);
}

Solution solve_rwca_heuristic(const Instance& instance) {
  return heuristic_impl(instance, enumerate_aggregation_candidates(instance));
}

Solution solve_rwca_heuristic(const Instance& instance, const CandidateSet& candidates) {
  validate_candidate_set(instance, candidates);
  return heuristic_impl(instance, candidates);
}

namespace {

Solution heuristic_impl(const Instance& instance, const CandidateSet& candidates) {
  const int m = static_cast<int>(instance.demands.size());
  if (instance.wavelength_capacity < m) {
    throw ValidationError(
        "rwca heuristic requires wavelength capacity >= demand count, got " +
        std::to_string(instance.wavelength_capacity) + " < " + std::to_string(m));
  }
  const Topology& topo = instance.topology;

  // Best (cheapest) candidate per demand pair; first hit wins ties so the
  // choice follows enumeration order.
  std::map<std::pair<int, int>, int> best_candidate;
  for (int c = 0; c < static_cast<int>(candidates.groups.size()); ++c) {
    const AggregationCandidate& cand = candidates.groups[c];
    int ia = instance.demand_index(cand.demand_a);
    int ib = instance.demand_index(cand.demand_b);
    if (ia > ib) std::swap(ia, ib);
    auto [it, inserted] = best_candidate.try_emplace({ia, ib}, c);
    if (!inserted &&
        cand.total_links() < candidates.groups[it->second].total_links()) {
      it->second = c;
    }
  }

  struct PairSaving {
    long long saving;
    int index_a;
    int index_b;
    int candidate;
  };
  std::vector<PairSaving> savings;
  for (const auto& [pair, candidate] : best_candidate) {
    const auto& [ia, ib] = pair;
    const long long bypass = path_hops(candidates.alone_paths[ia].front()) +
                             path_hops(candidates.alone_paths[ib].front());
    const long long saving = bypass - candidates.groups[candidate].total_links();
    if (saving > 0) savings.push_back(PairSaving{saving, ia, ib, candidate});
  }
  std::sort(savings.begin(), savings.end(), [](const PairSaving& a, const PairSaving& b) {
    if (a.saving != b.saving) return a.saving > b.saving;
    return std::tie(a.index_a, a.index_b) < std::tie(b.index_a, b.index_b);
  });

  std::vector<char> paired(m, 0);
  std::vector<int> chosen_groups;
  for (const PairSaving& ps : savings) {
    if (paired[ps.index_a] || paired[ps.index_b]) continue;
    paired[ps.index_a] = paired[ps.index_b] = 1;
    chosen_groups.push_back(ps.candidate);
  }

  // Wavelength first-fit: groups first by descending size, then leftovers by
  // descending hop count. With capacity >= demand count this always places
  // every item.
  struct Item {
    bool grouped;
    int index;  // candidate index or demand index
    int size;
    std::vector<LinkId> links;
  };
  std::vector<Item> items;
  for (int c : chosen_groups) {
    const AggregationCandidate& cand = candidates.groups[c];
    Item item{true, c, cand.total_links(), {}};
    for (const auto* path : {&cand.tributary_a, &cand.tributary_b, &cand.aggregate_path}) {
      auto ids = path_links(topo, *path);
      item.links.insert(item.links.end(), ids->begin(), ids->end());
    }
    items.push_back(std::move(item));
  }
  for (int d = 0; d < m; ++d) {
    if (paired[d]) continue;
    const auto& path = candidates.alone_paths[d].front();
    items.push_back(Item{false, d, path_hops(path), *path_links(topo, path)});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.grouped != b.grouped) return a.grouped;
    return a.size > b.size;
  });

  const int capacity = instance.wavelength_capacity;
  std::vector<char> occupied(static_cast<std::size_t>(topo.link_count()) * capacity, 0);
  Solution solution;
  for (const Item& item : items) {
    int chosen = -1;
    for (int w = 0; w < capacity && chosen < 0; ++w) {
      bool free = true;
      for (LinkId link : item.links) {
        if (occupied[static_cast<std::size_t>(link) * capacity + w]) {
          free = false;
          break;
        }
      }
      if (free) chosen = w;
    }
    if (chosen < 0) {
      throw ValidationError("rwca heuristic could not place an item within capacity");
    }
    for (LinkId link : item.links) {
      occupied[static_cast<std::size_t>(link) * capacity + chosen] = 1;
    }
    if (item.grouped) {
      solution.groups.push_back(
          GroupAssignment::from_candidate(candidates.groups[item.index], chosen));
    } else {
      solution.alone.push_back(AloneAssignment{instance.demands[item.index].id,
                                               candidates.alone_paths[item.index].front(),
                                               chosen});
    }
  }
  std::sort(solution.alone.begin(), solution.alone.end(),
            [](const AloneAssignment& a, const AloneAssignment& b) {
              return a.demand_id < b.demand_id;
            });
  std::sort(solution.groups.begin(), solution.groups.end(),
            [](const GroupAssignment& a, const GroupAssignment& b) {
              return std::tie(a.demand_a, a.demand_b) < std::tie(b.demand_a, b.demand_b);
            });
  return solution;
}

}  // namespace

double rwca_lower_bound(const Instance& instance) {
  const Topology& topo = instance.topology;
  const int n = topo.node_count();
  const int m = static_cast<int>(instance.demands.size());

  std::vector<std::vector<int>> dist(n);
  for (NodeId v = 0; v < n; ++v) dist[v] = bfs_hop_distances(topo, v);

  long long base = 0;
  for (const Demand& d : instance.demands) base += dist[d.source][d.destination];

  // Pair weight: best possible saving with free routing through any
  // aggregation node v != destination, clamped at zero.
  std::vector<std::vector<long long>> weights(m, std::vector<long long>(m, 0));
  std::map<NodeId, std::vector<int>> by_destination;
  for (int d = 0; d < m; ++d) {
    by_destination[instance.demands[d].destination].push_back(d);
  }
  for (const auto& [t, members] : by_destination) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const Demand& a = instance.demands[members[x]];
        const Demand& b = instance.demands[members[y]];
        const long long bypass = dist[a.source][t] + dist[b.source][t];
        long long best = 0;
        for (NodeId v = 0; v < n; ++v) {
          if (v == t) continue;
          const long long grouped = dist[a.source][v] + dist[b.source][v] + dist[v][t];
          best = std::max(best, bypass - grouped);
        }
        weights[members[x]][members[y]] = weights[members[y]][members[x]] = best;
      }
    }
  }

  long long matching = 0;
  for (const auto& [t, members] : by_destination) {
    matching += matching_value(members, weights);
  }
  return static_cast<double>(base - matching);
}

}  // namespace ocn
