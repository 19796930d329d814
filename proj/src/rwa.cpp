#include "ocn/rwa.hpp"

#include <algorithm>
#include <numeric>

#include "engine.hpp"

namespace ocn {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kFeasible: return "Feasible";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kLimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

std::optional<Solution> solve_rwa_first_fit(const Instance& instance,
                                            FirstFitOrdering ordering) {
  const Topology& topo = instance.topology;
  const int m = static_cast<int>(instance.demands.size());
  const int capacity = instance.wavelength_capacity;

  struct Route {
    int index;
    std::vector<NodeId> path;
    std::vector<LinkId> links;
  };
  std::vector<Route> routes;
  routes.reserve(m);
  for (int d = 0; d < m; ++d) {
    const Demand& demand = instance.demands[d];
    auto paths = k_shortest_paths(topo, demand.source, demand.destination, 1);
    routes.push_back(Route{d, paths.front(), *path_links(topo, paths.front())});
  }

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (ordering == FirstFitOrdering::kByLongestPath) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const int ha = static_cast<int>(routes[a].links.size());
      const int hb = static_cast<int>(routes[b].links.size());
      if (ha != hb) return ha > hb;
      return instance.demands[a].id < instance.demands[b].id;
    });
  }

  std::vector<char> occupied(static_cast<std::size_t>(topo.link_count()) * capacity, 0);
  Solution solution;
  for (int pos : order) {
    const Route& route = routes[pos];
    int chosen = -1;
    for (int w = 0; w < capacity && chosen < 0; ++w) {
      bool free = true;
      for (LinkId link : route.links) {
        if (occupied[static_cast<std::size_t>(link) * capacity + w]) {
          free = false;
          break;
        }
      }
      if (free) chosen = w;
    }
    if (chosen < 0) return std::nullopt;
    for (LinkId link : route.links) {
      occupied[static_cast<std::size_t>(link) * capacity + chosen] = 1;
    }
    solution.alone.push_back(
        AloneAssignment{instance.demands[route.index].id, route.path, chosen});
  }
  std::sort(solution.alone.begin(), solution.alone.end(),
            [](const AloneAssignment& a, const AloneAssignment& b) {
              return a.demand_id < b.demand_id;
            });
  return solution;
}

SolveResult solve_rwa_exact(const Instance& instance, const SolveLimits& limits) {
  CandidateSet candidates;
  const int m = static_cast<int>(instance.demands.size());
  candidates.alone_paths.resize(m);
  for (int d = 0; d < m; ++d) {
    const Demand& demand = instance.demands[d];
    candidates.alone_paths[d] =
        k_shortest_paths(instance.topology, demand.source, demand.destination,
                         instance.k_paths);
  }

  std::vector<Solution> seeds;
  if (auto seed = solve_rwa_first_fit(instance)) seeds.push_back(std::move(*seed));
  return internal::branch_and_bound(instance, candidates, limits, std::move(seeds));
}

}  // namespace ocn
