#include <doctest.h>

#include "ocn/oracle.hpp"
#include "ocn/rwa.hpp"
#include "ocn/rwca.hpp"
#include "ocn/verifier.hpp"
#include "test_util.hpp"

using namespace ocn;

TEST_CASE("oracle reproduces the example costs in both modes") {
  const Instance instance = test::fig1_instance();
  const SolveResult bypass = brute_force_optimum(instance, {}, OracleMode::kBypass);
  REQUIRE(bypass.status == SolveStatus::kOptimal);
  CHECK(bypass.cost() == 4);

  const SolveResult rwca = brute_force_optimum(instance, {}, OracleMode::kRwca);
  REQUIRE(rwca.status == SolveStatus::kOptimal);
  CHECK(rwca.cost() == 3);
  CHECK(verify_solution(instance, *rwca.solution).ok());
}

TEST_CASE("oracle on a single demand returns the shortest-path hop count") {
  Topology topo = fig1_topology();
  Demand d;
  d.id = 0;
  d.source = topo.node_or_throw("B");
  d.destination = topo.node_or_throw("C");
  const Instance instance = Instance::create(std::move(topo), {d}, 1, 1);
  for (OracleMode mode : {OracleMode::kBypass, OracleMode::kRwca}) {
    const SolveResult result = brute_force_optimum(instance, {}, mode);
    REQUIRE(result.status == SolveStatus::kOptimal);
    CHECK(result.cost() == 2);
  }
}

TEST_CASE("oracle detects infeasibility under one wavelength") {
  const Instance instance = test::fig1_instance(3, 1);
  CHECK(brute_force_optimum(instance, {}, OracleMode::kBypass).status ==
        SolveStatus::kInfeasible);
  // Aggregation fits everything onto the single wavelength.
  const SolveResult rwca = brute_force_optimum(instance, {}, OracleMode::kRwca);
  REQUIRE(rwca.status == SolveStatus::kOptimal);
  CHECK(rwca.cost() == 3);
}

TEST_CASE("oracle refuses instances beyond its caps") {
  OracleCaps caps;
  caps.max_nodes = 3;
  CHECK_THROWS_WITH_AS(brute_force_optimum(test::fig1_instance(), caps),
                       doctest::Contains("caps exceeded"), ValidationError);
  OracleCaps bad;
  bad.max_demands = 0;
  CHECK_THROWS_AS(brute_force_optimum(test::fig1_instance(), bad), ValidationError);
}

TEST_CASE("bypass optimum never beats the aggregation optimum") {
  SplitMix64 rng(31);
  for (int round = 0; round < 60; ++round) {
    const Instance instance = test::random_instance(rng);
    const SolveResult bypass = brute_force_optimum(instance, {}, OracleMode::kBypass);
    const SolveResult rwca = brute_force_optimum(instance, {}, OracleMode::kRwca);
    if (bypass.status == SolveStatus::kOptimal) {
      // Every bypass solution is also feasible with aggregation allowed.
      REQUIRE(rwca.status == SolveStatus::kOptimal);
      CHECK(rwca.cost() <= bypass.cost());
      CHECK(verify_solution(instance, *bypass.solution).ok());
      CHECK(verify_solution(instance, *rwca.solution).ok());
    }
  }
}

namespace {

// Fully naive reference: materialize every complete assignment (pairing x
// routing x wavelengths), keep whatever the verifier accepts, return the
// cheapest. No pruning at all, so it double-checks the oracle's enumeration.
struct NaiveItem {
  bool pair;
  int a, b;
};

void naive_routes(const Instance& instance, const std::vector<NaiveItem>& items,
                  std::size_t at, Solution& partial, long long& best) {
  const Topology& topo = instance.topology;
  const int w_count = instance.wavelength_capacity;
  if (at == items.size()) {
    // Expand every wavelength combination over the chosen routes.
    const std::size_t slots = partial.alone.size() + partial.groups.size();
    std::vector<int> waves(slots, 0);
    while (true) {
      Solution candidate = partial;
      std::size_t slot = 0;
      for (auto& alone : candidate.alone) alone.wavelength = waves[slot++];
      for (auto& group : candidate.groups) {
        group.wavelength_tributary_a = group.wavelength_tributary_b =
            group.wavelength_aggregate = waves[slot++];
      }
      const auto verdict = verify_solution(instance, candidate);
      if (verdict.ok()) best = std::min(best, (long long)verdict.metrics->wavelength_links);
      std::size_t i = 0;
      while (i < slots && ++waves[i] == w_count) waves[i++] = 0;
      if (i == slots) break;
    }
    return;
  }
  const NaiveItem& item = items[at];
  const Demand& da = instance.demands[item.a];
  if (!item.pair) {
    for (const auto& path : all_simple_paths(topo, da.source, da.destination)) {
      partial.alone.push_back(AloneAssignment{da.id, path, 0});
      naive_routes(instance, items, at + 1, partial, best);
      partial.alone.pop_back();
    }
    return;
  }
  const Demand& db = instance.demands[item.b];
  for (NodeId v = 0; v < topo.node_count(); ++v) {
    if (v == da.destination) continue;
    const auto tribs_a = da.source == v ? std::vector<std::vector<NodeId>>{{v}}
                                        : all_simple_paths(topo, da.source, v);
    const auto tribs_b = db.source == v ? std::vector<std::vector<NodeId>>{{v}}
                                        : all_simple_paths(topo, db.source, v);
    for (const auto& ta : tribs_a) {
      for (const auto& tb : tribs_b) {
        for (const auto& agg : all_simple_paths(topo, v, da.destination)) {
          AggregationCandidate cand{da.id, db.id, v, ta, tb, agg};
          partial.groups.push_back(GroupAssignment::from_candidate(cand, 0));
          naive_routes(instance, items, at + 1, partial, best);
          partial.groups.pop_back();
        }
      }
    }
  }
}

void naive_pairings(const Instance& instance, std::vector<int>& mate, int from,
                    OracleMode mode, long long& best) {
  const int m = static_cast<int>(instance.demands.size());
  int i = from;
  while (i < m && mate[i] >= 0) ++i;
  if (i == m) {
    std::vector<NaiveItem> items;
    for (int d = 0; d < m; ++d) {
      if (mate[d] == d) items.push_back(NaiveItem{false, d, -1});
      else if (mate[d] > d) items.push_back(NaiveItem{true, d, mate[d]});
    }
    Solution partial;
    naive_routes(instance, items, 0, partial, best);
    return;
  }
  mate[i] = i;
  naive_pairings(instance, mate, i + 1, mode, best);
  mate[i] = -1;
  if (mode == OracleMode::kBypass) return;
  for (int j = i + 1; j < m; ++j) {
    if (mate[j] >= 0) continue;
    if (instance.demands[i].destination != instance.demands[j].destination) continue;
    mate[i] = j;
    mate[j] = i;
    naive_pairings(instance, mate, i + 1, mode, best);
    mate[i] = mate[j] = -1;
  }
}

long long naive_optimum(const Instance& instance, OracleMode mode) {
  std::vector<int> mate(instance.demands.size(), -1);
  long long best = std::numeric_limits<long long>::max();
  naive_pairings(instance, mate, 0, mode, best);
  return best;
}

}  // namespace

TEST_CASE("exact solvers track the oracle on six-node instances") {
  SplitMix64 rng(909);
  const OracleCaps caps{6, 6, 6};
  for (int round = 0; round < 120; ++round) {
    const Instance instance = test::random_instance(rng, true, 6, 6, 6, 64);
    const SolveResult oracle_bypass = brute_force_optimum(instance, caps, OracleMode::kBypass);
    const SolveResult exact_bypass = solve_rwa_exact(instance);
    REQUIRE(oracle_bypass.status == exact_bypass.status);
    if (oracle_bypass.status == SolveStatus::kOptimal) {
      CHECK(oracle_bypass.cost() == exact_bypass.cost());
    }
    const SolveResult oracle_rwca = brute_force_optimum(instance, caps, OracleMode::kRwca);
    const SolveResult exact_rwca = solve_rwca_exact(instance);
    REQUIRE(oracle_rwca.status == exact_rwca.status);
    if (oracle_rwca.status == SolveStatus::kOptimal) {
      CHECK(oracle_rwca.cost() == exact_rwca.cost());
    }
  }
}

TEST_CASE("oracle agrees with a zero-pruning naive enumerator") {
  SplitMix64 rng(404);
  int done = 0;
  for (int round = 0; round < 60 && done < 20; ++round) {
    const Instance instance = test::random_instance(rng, true, 4, 3, 3, 8);
    if (instance.demands.size() > 3) continue;
    ++done;
    for (OracleMode mode : {OracleMode::kBypass, OracleMode::kRwca}) {
      const long long naive = naive_optimum(instance, mode);
      const SolveResult oracle = brute_force_optimum(instance, {}, mode);
      if (naive == std::numeric_limits<long long>::max()) {
        CHECK(oracle.status == SolveStatus::kInfeasible);
      } else {
        REQUIRE(oracle.status == SolveStatus::kOptimal);
        CHECK(oracle.cost() == naive);
      }
    }
  }
  CHECK(done == 20);
}

TEST_CASE("all_simple_paths enumerates the triangle") {
  const Topology topo =
      Topology::build("tri", {"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"A", "C"}});
  const auto paths = all_simple_paths(topo, topo.node_or_throw("A"), topo.node_or_throw("C"));
  CHECK(paths.size() == 2);
  CHECK_THROWS_AS(all_simple_paths(topo, 0, 0), ValidationError);
}
