#include "engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <tuple>

namespace ocn::internal {
namespace {

using Clock = std::chrono::steady_clock;

struct AloneOption {
  int path_rank = 0;
  int hops = 0;
  std::vector<NodeId> path;
  std::vector<LinkId> links;
};

struct GroupOption {
  int candidate_index = 0;
  int index_a = 0;  // demand indices into the instance, index_a < index_b
  int index_b = 0;
  int total_links = 0;
  std::vector<LinkId> links;  // tributaries plus aggregate
};

struct DemandChoice {
  bool grouped = false;
  int option = -1;  // path rank or group option index
  int wavelength = -1;
};

// Maximum-weight matching over one shared-destination demand group, counting
// only members not yet assigned. Exact subset DP up to 16 members, then a
// safe overestimate (half the summed best weights), which keeps the derived
// lower bound admissible.
class DestinationGroup {
 public:
  DestinationGroup(std::vector<int> members, const std::vector<std::vector<long long>>& weights)
      : members_(std::move(members)), weights_(weights) {}

  long long matching(const std::vector<char>& assigned, int skip_a = -1, int skip_b = -1) const {
    std::vector<int> live;
    for (int d : members_) {
      if (!assigned[d] && d != skip_a && d != skip_b) live.push_back(d);
    }
    const int s = static_cast<int>(live.size());
    if (s < 2) return 0;
    if (s > 16) {
      long long sum = 0;
      for (int i = 0; i < s; ++i) {
        long long best = 0;
        for (int j = 0; j < s; ++j) {
          if (j != i) best = std::max(best, weights_[live[i]][live[j]]);
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
        const long long w = weights_[live[i]][live[j]];
        if (w > 0) {
          dp[mask] =
              std::max(dp[mask], dp[mask ^ (std::size_t{1} << i) ^ (std::size_t{1} << j)] + w);
        }
      }
    }
    return dp.back();
  }

 private:
  std::vector<int> members_;
  const std::vector<std::vector<long long>>& weights_;
};

class Search {
 public:
  Search(const Instance& instance, const CandidateSet& candidates, const SolveLimits& limits)
      : instance_(instance), limits_(limits), started_(Clock::now()) {
    if (limits.time_budget_seconds <= 0 || limits.node_budget <= 0) {
      throw ValidationError("solve limits must be positive");
    }
    prepare(candidates);
  }

  SolveResult run(std::vector<Solution> seeds) {
    for (Solution& seed : seeds) {
      const long long cost = solution_metrics(seed).wavelength_links;
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_solution_ = std::move(seed);
      }
    }

    if (best_cost_ > root_lower_bound_) {
      dfs(0);
    }

    SolveResult result;
    result.explored_nodes = explored_;
    result.wall_seconds = std::chrono::duration<double>(Clock::now() - started_).count();
    if (limit_hit_) {
      result.status = SolveStatus::kLimitExceeded;
      result.lower_bound = static_cast<double>(root_lower_bound_);
      if (best_solution_) result.solution = std::move(best_solution_);
    } else if (best_solution_) {
      result.status = SolveStatus::kOptimal;
      result.lower_bound = static_cast<double>(best_cost_);
      result.solution = std::move(best_solution_);
    } else {
      result.status = SolveStatus::kInfeasible;
      result.lower_bound = static_cast<double>(root_lower_bound_);
    }
    return result;
  }

 private:
  void prepare(const CandidateSet& candidates) {
    const Topology& topo = instance_.topology;
    const int m = static_cast<int>(instance_.demands.size());
    const int links = topo.link_count();
    const int capacity = instance_.wavelength_capacity;

    std::map<NodeId, std::vector<int>> bfs_cache;
    shortest_hops_.resize(m);
    for (int d = 0; d < m; ++d) {
      const Demand& demand = instance_.demands[d];
      auto [it, inserted] = bfs_cache.try_emplace(demand.source);
      if (inserted) it->second = bfs_hop_distances(topo, demand.source);
      shortest_hops_[d] = it->second[demand.destination];
    }

    alone_options_.resize(m);
    for (int d = 0; d < m; ++d) {
      int rank = 0;
      for (const auto& path : candidates.alone_paths[d]) {
        AloneOption option;
        option.path_rank = rank++;
        option.hops = path_hops(path);
        option.path = path;
        option.links = *path_links(topo, path);
        alone_options_[d].push_back(std::move(option));
      }
    }

    pair_weights_.assign(m, std::vector<long long>(m, 0));
    groups_by_first_.resize(m);
    std::vector<std::vector<long long>> pair_best(m, std::vector<long long>(m, -1));
    for (int c = 0; c < static_cast<int>(candidates.groups.size()); ++c) {
      const AggregationCandidate& cand = candidates.groups[c];
      GroupOption option;
      option.candidate_index = c;
      option.index_a = instance_.demand_index(cand.demand_a);
      option.index_b = instance_.demand_index(cand.demand_b);
      if (option.index_a > option.index_b) std::swap(option.index_a, option.index_b);
      option.total_links = cand.total_links();
      for (const auto* path : {&cand.tributary_a, &cand.tributary_b, &cand.aggregate_path}) {
        auto ids = path_links(topo, *path);
        option.links.insert(option.links.end(), ids->begin(), ids->end());
      }
      auto& best = pair_best[option.index_a][option.index_b];
      if (best < 0 || option.total_links < best) best = option.total_links;
      groups_by_first_[option.index_a].push_back(static_cast<int>(group_options_.size()));
      group_options_.push_back(std::move(option));
      group_candidates_.push_back(&cand);
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (pair_best[i][j] < 0) continue;
        const long long saving = shortest_hops_[i] + shortest_hops_[j] - pair_best[i][j];
        pair_weights_[i][j] = pair_weights_[j][i] = std::max<long long>(0, saving);
      }
    }

    std::map<NodeId, std::vector<int>> by_destination;
    for (int d = 0; d < m; ++d) {
      by_destination[instance_.demands[d].destination].push_back(d);
    }
    demand_group_.assign(m, -1);
    for (auto& [dest, members] : by_destination) {
      if (members.size() < 2) continue;
      for (int d : members) demand_group_[d] = static_cast<int>(dest_groups_.size());
      dest_groups_.emplace_back(members, pair_weights_);
    }

    assigned_.assign(m, 0);
    choices_.assign(m, DemandChoice{});
    occupancy_.assign(static_cast<std::size_t>(links) * capacity, 0);
    wavelength_refs_.assign(capacity, 0);

    unassigned_sp_sum_ = 0;
    for (int d = 0; d < m; ++d) unassigned_sp_sum_ += shortest_hops_[d];
    group_matching_.resize(dest_groups_.size());
    total_matching_ = 0;
    for (std::size_t g = 0; g < dest_groups_.size(); ++g) {
      group_matching_[g] = dest_groups_[g].matching(assigned_);
      total_matching_ += group_matching_[g];
    }
    root_lower_bound_ = unassigned_sp_sum_ - total_matching_;
  }

  bool fits(const std::vector<LinkId>& links, int wavelength) const {
    for (LinkId link : links) {
      if (occupancy_[static_cast<std::size_t>(link) * instance_.wavelength_capacity +
                     wavelength]) {
        return false;
      }
    }
    return true;
  }

  void occupy(const std::vector<LinkId>& links, int wavelength, bool value) {
    for (LinkId link : links) {
      occupancy_[static_cast<std::size_t>(link) * instance_.wavelength_capacity + wavelength] =
          value;
    }
  }

  void take_wavelength(int wavelength) {
    if (++wavelength_refs_[wavelength] == 1 && wavelength == used_wavelengths_) {
      ++used_wavelengths_;
    }
  }

  void drop_wavelength(int wavelength) {
    --wavelength_refs_[wavelength];
    while (used_wavelengths_ > 0 && wavelength_refs_[used_wavelengths_ - 1] == 0) {
      --used_wavelengths_;
    }
  }

  void refresh_group(int d) {
    const int g = demand_group_[d];
    if (g < 0) return;
    total_matching_ -= group_matching_[g];
    group_matching_[g] = dest_groups_[g].matching(assigned_);
    total_matching_ += group_matching_[g];
  }

  long long remaining_bound_alone(int d) const {
    long long matching = total_matching_;
    const int g = demand_group_[d];
    if (g >= 0) {
      matching += dest_groups_[g].matching(assigned_, d) - group_matching_[g];
    }
    return unassigned_sp_sum_ - shortest_hops_[d] - matching;
  }

  long long remaining_bound_pair(int a, int b) const {
    long long matching = total_matching_;
    const int g = demand_group_[a];  // a pair always shares one destination group
    if (g >= 0) {
      matching += dest_groups_[g].matching(assigned_, a, b) - group_matching_[g];
    }
    return unassigned_sp_sum_ - shortest_hops_[a] - shortest_hops_[b] - matching;
  }

  bool out_of_budget() {
    if (limit_hit_) return true;
    if (explored_ >= limits_.node_budget) {
      limit_hit_ = true;
      return true;
    }
    if ((explored_ & 255) == 1) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - started_).count();
      if (elapsed > limits_.time_budget_seconds) {
        limit_hit_ = true;
        return true;
      }
    }
    return false;
  }

  void record_incumbent() {
    Solution solution;
    const int m = static_cast<int>(instance_.demands.size());
    std::vector<char> emitted(m, 0);
    for (int d = 0; d < m; ++d) {
      if (emitted[d]) continue;
      const DemandChoice& choice = choices_[d];
      if (choice.grouped) {
        const GroupOption& option = group_options_[choice.option];
        solution.groups.push_back(GroupAssignment::from_candidate(
            *group_candidates_[choice.option], choice.wavelength));
        emitted[option.index_a] = emitted[option.index_b] = 1;
      } else {
        solution.alone.push_back(AloneAssignment{instance_.demands[d].id,
                                                 alone_options_[d][choice.option].path,
                                                 choice.wavelength});
        emitted[d] = 1;
      }
    }
    best_solution_ = std::move(solution);
  }

  // Structural branching option; wavelengths are expanded in the DFS loop.
  struct Branch {
    long long bound = 0;
    bool grouped = false;
    int rank = 0;
    int option = 0;
  };

  void dfs(int depth) {
    const int m = static_cast<int>(instance_.demands.size());
    if (depth == m) {
      if (partial_cost_ < best_cost_) {
        best_cost_ = partial_cost_;
        record_incumbent();
        if (best_cost_ <= root_lower_bound_) proved_optimal_ = true;
      }
      return;
    }
    ++explored_;
    if (out_of_budget()) return;

    int d = 0;
    while (assigned_[d]) ++d;

    std::vector<Branch> branches;
    const long long rest_alone = remaining_bound_alone(d);
    for (int rank = 0; rank < static_cast<int>(alone_options_[d].size()); ++rank) {
      branches.push_back(
          Branch{partial_cost_ + alone_options_[d][rank].hops + rest_alone, false, rank, rank});
    }
    std::map<int, long long> rest_by_partner;
    for (int rank = 0; rank < static_cast<int>(groups_by_first_[d].size()); ++rank) {
      const int option_index = groups_by_first_[d][rank];
      const GroupOption& option = group_options_[option_index];
      if (assigned_[option.index_b]) continue;
      auto [it, inserted] = rest_by_partner.try_emplace(option.index_b);
      if (inserted) it->second = remaining_bound_pair(d, option.index_b);
      branches.push_back(
          Branch{partial_cost_ + option.total_links + it->second, true, rank, option_index});
    }
    std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
      return std::tie(a.bound, a.grouped, a.rank) < std::tie(b.bound, b.grouped, b.rank);
    });

    const int capacity = instance_.wavelength_capacity;
    for (const Branch& branch : branches) {
      if (branch.bound >= best_cost_) break;  // branches are sorted by bound
      const std::vector<LinkId>& links = branch.grouped
                                             ? group_options_[branch.option].links
                                             : alone_options_[d][branch.option].links;
      const int wavelength_cap = std::min(used_wavelengths_, capacity - 1);
      for (int w = 0; w <= wavelength_cap; ++w) {
        if (branch.bound >= best_cost_) break;
        if (!fits(links, w)) continue;

        occupy(links, w, true);
        take_wavelength(w);
        if (branch.grouped) {
          const GroupOption& option = group_options_[branch.option];
          partial_cost_ += option.total_links;
          assigned_[option.index_a] = assigned_[option.index_b] = 1;
          choices_[option.index_a] = DemandChoice{true, branch.option, w};
          choices_[option.index_b] = DemandChoice{true, branch.option, w};
          unassigned_sp_sum_ -= shortest_hops_[option.index_a] + shortest_hops_[option.index_b];
          refresh_group(option.index_a);

          dfs(depth + 2);

          unassigned_sp_sum_ += shortest_hops_[option.index_a] + shortest_hops_[option.index_b];
          assigned_[option.index_a] = assigned_[option.index_b] = 0;
          refresh_group(option.index_a);
          partial_cost_ -= option.total_links;
        } else {
          const AloneOption& option = alone_options_[d][branch.option];
          partial_cost_ += option.hops;
          assigned_[d] = 1;
          choices_[d] = DemandChoice{false, branch.rank, w};
          unassigned_sp_sum_ -= shortest_hops_[d];
          refresh_group(d);

          dfs(depth + 1);

          unassigned_sp_sum_ += shortest_hops_[d];
          assigned_[d] = 0;
          refresh_group(d);
          partial_cost_ -= option.hops;
        }
        drop_wavelength(w);
        occupy(links, w, false);
        if (limit_hit_ || proved_optimal_) return;
      }
    }
  }

  const Instance& instance_;
  const SolveLimits& limits_;
  Clock::time_point started_;

  std::vector<int> shortest_hops_;
  std::vector<std::vector<AloneOption>> alone_options_;
  std::vector<GroupOption> group_options_;
  std::vector<const AggregationCandidate*> group_candidates_;
  std::vector<std::vector<int>> groups_by_first_;
  std::vector<std::vector<long long>> pair_weights_;
  std::vector<DestinationGroup> dest_groups_;
  std::vector<int> demand_group_;

  std::vector<char> assigned_;
  std::vector<DemandChoice> choices_;
  std::vector<char> occupancy_;
  std::vector<int> wavelength_refs_;
  int used_wavelengths_ = 0;
  long long partial_cost_ = 0;
  long long unassigned_sp_sum_ = 0;
  std::vector<long long> group_matching_;
  long long total_matching_ = 0;
  long long root_lower_bound_ = 0;

  long long best_cost_ = std::numeric_limits<long long>::max();
  std::optional<Solution> best_solution_;
  long long explored_ = 0;
  bool limit_hit_ = false;
  bool proved_optimal_ = false;
};

}  // namespace

SolveResult branch_and_bound(const Instance& instance, const CandidateSet& candidates,
                             const SolveLimits& limits, std::vector<Solution> seeds) {
  Search search(instance, candidates, limits);
  return search.run(std::move(seeds));
}

}  // namespace ocn::internal
