#include <doctest.h>

#include "ocn/candidates.hpp"
#include "test_util.hpp"

using namespace ocn;

TEST_CASE("fig1 instance has exactly one aggregation candidate") {
  const Instance instance = test::fig1_instance();
  const CandidateSet set = enumerate_aggregation_candidates(instance);
  REQUIRE(set.alone_paths.size() == 2);
  CHECK(set.alone_paths[0].size() == 1);  // only one simple A->C path exists
  REQUIRE(set.groups.size() == 1);

  const Topology& topo = instance.topology;
  const AggregationCandidate& cand = set.groups[0];
  CHECK(cand.demand_a == 0);
  CHECK(cand.demand_b == 1);
  CHECK(cand.aggregation_node == topo.node_or_throw("X"));
  CHECK(cand.tributary_a == std::vector<NodeId>{topo.node_or_throw("A"), topo.node_or_throw("X")});
  CHECK(cand.tributary_b == std::vector<NodeId>{topo.node_or_throw("B"), topo.node_or_throw("X")});
  CHECK(cand.aggregate_path ==
        std::vector<NodeId>{topo.node_or_throw("X"), topo.node_or_throw("C")});
  CHECK(cand.total_links() == 3);
}

TEST_CASE("demands on different destinations never form candidates") {
  Topology topo = fig1_topology();
  std::vector<Demand> demands(2);
  demands[0].id = 0;
  demands[0].source = topo.node_or_throw("A");
  demands[0].destination = topo.node_or_throw("C");
  demands[1].id = 1;
  demands[1].source = topo.node_or_throw("B");
  demands[1].destination = topo.node_or_throw("A");
  const Instance instance = Instance::create(std::move(topo), std::move(demands), 3, 2);
  CHECK(enumerate_aggregation_candidates(instance).groups.empty());
}

TEST_CASE("path graph candidate includes the zero-length tributary") {
  const Instance instance = test::path_abc_instance();
  const CandidateSet set = enumerate_aggregation_candidates(instance);
  const Topology& topo = instance.topology;
  const NodeId b = topo.node_or_throw("B");

  // Only v = B survives: aggregating at A would reuse link A-B on one wavelength.
  REQUIRE(set.groups.size() == 1);
  const AggregationCandidate& cand = set.groups[0];
  CHECK(cand.aggregation_node == b);
  CHECK(cand.tributary_a ==
        std::vector<NodeId>{topo.node_or_throw("A"), b});
  CHECK(cand.tributary_b == std::vector<NodeId>{b});  // source already at the node
  CHECK(cand.aggregate_path == std::vector<NodeId>{b, topo.node_or_throw("C")});
  CHECK(cand.total_links() == 2);
}

TEST_CASE("hand-rolled candidate sets are validated before solving") {
  const Instance instance = test::fig1_instance();
  CandidateSet set = enumerate_aggregation_candidates(instance);
  CHECK_NOTHROW(validate_candidate_set(instance, set));

  CandidateSet wrong_size = set;
  wrong_size.alone_paths.pop_back();
  CHECK_THROWS_AS(validate_candidate_set(instance, wrong_size), ValidationError);

  CandidateSet bad_pair = set;
  bad_pair.groups[0].demand_b = 42;
  CHECK_THROWS_AS(validate_candidate_set(instance, bad_pair), ValidationError);

  CandidateSet bad_path = set;
  bad_path.groups[0].tributary_a = {instance.topology.node_or_throw("A"),
                                    instance.topology.node_or_throw("C")};
  CHECK_THROWS_AS(validate_candidate_set(instance, bad_path), ValidationError);
}

TEST_CASE("candidates satisfy their structural invariants on random instances") {
  SplitMix64 rng(7);
  for (int round = 0; round < 40; ++round) {
    const Instance instance = test::random_instance(rng, true, 5, 4, 4, 8);
    const CandidateSet set = enumerate_aggregation_candidates(instance);
    for (const AggregationCandidate& cand : set.groups) {
      const Demand& da = instance.demand_by_id(cand.demand_a);
      const Demand& db = instance.demand_by_id(cand.demand_b);
      CHECK(cand.demand_a != cand.demand_b);
      CHECK(da.destination == db.destination);
      CHECK(cand.aggregation_node != da.destination);
      CHECK(cand.tributary_a.front() == da.source);
      CHECK(cand.tributary_a.back() == cand.aggregation_node);
      CHECK(cand.tributary_b.front() == db.source);
      CHECK(cand.tributary_b.back() == cand.aggregation_node);
      CHECK(cand.aggregate_path.front() == cand.aggregation_node);
      CHECK(cand.aggregate_path.back() == da.destination);
      CHECK(is_simple_path(cand.tributary_a));
      CHECK(is_simple_path(cand.tributary_b));
      CHECK(is_simple_path(cand.aggregate_path));

      // Link-disjoint tributaries, no repeated link in either combined walk.
      auto la = *path_links(instance.topology, cand.tributary_a);
      auto lb = *path_links(instance.topology, cand.tributary_b);
      auto lagg = *path_links(instance.topology, cand.aggregate_path);
      for (LinkId l : la) {
        CHECK(std::find(lb.begin(), lb.end(), l) == lb.end());
        CHECK(std::find(lagg.begin(), lagg.end(), l) == lagg.end());
      }
      for (LinkId l : lb) {
        CHECK(std::find(lagg.begin(), lagg.end(), l) == lagg.end());
      }
    }
    // Deterministic, duplicate-free enumeration.
    const CandidateSet again = enumerate_aggregation_candidates(instance);
    REQUIRE(again.groups.size() == set.groups.size());
    for (std::size_t i = 0; i < set.groups.size(); ++i) {
      CHECK(set.groups[i].aggregation_node == again.groups[i].aggregation_node);
      CHECK(set.groups[i].tributary_a == again.groups[i].tributary_a);
      CHECK(set.groups[i].tributary_b == again.groups[i].tributary_b);
      CHECK(set.groups[i].aggregate_path == again.groups[i].aggregate_path);
      for (std::size_t j = i + 1; j < set.groups.size(); ++j) {
        const bool same = set.groups[i].demand_a == set.groups[j].demand_a &&
                          set.groups[i].demand_b == set.groups[j].demand_b &&
                          set.groups[i].aggregation_node == set.groups[j].aggregation_node &&
                          set.groups[i].tributary_a == set.groups[j].tributary_a &&
                          set.groups[i].tributary_b == set.groups[j].tributary_b &&
                          set.groups[i].aggregate_path == set.groups[j].aggregate_path;
        CHECK(!same);
      }
    }
  }
}
