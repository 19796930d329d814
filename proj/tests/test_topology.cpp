#include <doctest.h>

#include "ocn/oracle.hpp"
#include "ocn/topologies.hpp"
#include "ocn/topology.hpp"
#include "test_util.hpp"

using namespace ocn;

TEST_CASE("build validates and indexes the fig1 graph") {
  const Topology topo = fig1_topology();
  CHECK(topo.node_count() == 4);
  CHECK(topo.link_count() == 3);
  CHECK(topo.node_name(0) == "A");
  CHECK(topo.find_node("X").has_value());
  CHECK(topo.find_link(*topo.find_node("A"), *topo.find_node("X")).has_value());
  CHECK(!topo.find_link(*topo.find_node("A"), *topo.find_node("C")).has_value());
}

TEST_CASE("build rejects malformed graphs, naming the offender") {
  CHECK_THROWS_WITH_AS(Topology::build("t", {"A"}, {{"A", "A"}}),
                       doctest::Contains("self-loop link A-A"), ValidationError);
  CHECK_THROWS_WITH_AS(Topology::build("t", {"A", "B", "C", "D"}, {{"A", "B"}}),
                       doctest::Contains("disconnected"), ValidationError);
  CHECK_THROWS_WITH_AS(Topology::build("t", {"A", "A"}, {{"A", "A"}}),
                       doctest::Contains("duplicate node \"A\""), ValidationError);
  CHECK_THROWS_WITH_AS(Topology::build("t", {"A", "B"}, {{"A", "B"}, {"B", "A"}}),
                       doctest::Contains("duplicate link"), ValidationError);
  CHECK_THROWS_WITH_AS(Topology::build("t", {"A", "B"}, {{"A", "Z"}}),
                       doctest::Contains("\"Z\""), ValidationError);
  CHECK_THROWS_WITH_AS(Topology::build("t", {}, {{"A", "B"}}),
                       doctest::Contains("node list is empty"), ValidationError);
  CHECK_THROWS_WITH_AS(Topology::build("t", {"A", "B"}, {}),
                       doctest::Contains("link list is empty"), ValidationError);
}

TEST_CASE("bundled topologies have the expected shape") {
  const Topology nsfnet = nsfnet_topology();
  CHECK(nsfnet.node_count() == 14);
  CHECK(nsfnet.link_count() == 21);
  const Topology india = india_topology();
  CHECK(india.node_count() == 14);
  CHECK(india.link_count() == 23);
  CHECK(builtin_topology("nsfnet").has_value());
  CHECK(!builtin_topology("nowhere").has_value());
}

TEST_CASE("k_shortest_paths on the fig1 graph finds the only A-C path") {
  const Topology topo = fig1_topology();
  const auto paths = k_shortest_paths(topo, topo.node_or_throw("A"), topo.node_or_throw("C"), 3);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == std::vector<NodeId>{topo.node_or_throw("A"), topo.node_or_throw("X"),
                                        topo.node_or_throw("C")});
}

TEST_CASE("k_shortest_paths orders a triangle by hop count") {
  const Topology topo =
      Topology::build("tri", {"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"A", "C"}});
  const NodeId a = topo.node_or_throw("A"), b = topo.node_or_throw("B"),
               c = topo.node_or_throw("C");
  const auto paths = k_shortest_paths(topo, a, c, 2);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == std::vector<NodeId>{a, c});
  CHECK(paths[1] == std::vector<NodeId>{a, b, c});
}

TEST_CASE("k_shortest_paths matches exhaustive enumeration on nsfnet") {
  const Topology topo = nsfnet_topology();
  for (NodeId s = 0; s < topo.node_count(); ++s) {
    for (NodeId t = s + 1; t < topo.node_count(); ++t) {
      auto reference = all_simple_paths(topo, s, t);
      std::sort(reference.begin(), reference.end(),
                [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
      const auto got = k_shortest_paths(topo, s, t, 3);
      REQUIRE(got.size() == 3);
      for (int i = 0; i < 3; ++i) CHECK(got[i] == reference[i]);
      CHECK(path_hops(got[0]) <= path_hops(got[1]));
      CHECK(path_hops(got[1]) <= path_hops(got[2]));
    }
  }
}

TEST_CASE("k_shortest_paths output is simple, duplicate-free and connects s to t") {
  SplitMix64 rng(2024);
  for (int round = 0; round < 50; ++round) {
    const Topology topo = test::random_topology(rng, 6);
    const NodeId s = static_cast<NodeId>(rng.below(topo.node_count()));
    NodeId t = static_cast<NodeId>(rng.below(topo.node_count() - 1));
    if (t >= s) ++t;
    const auto paths = k_shortest_paths(topo, s, t, 4);
    REQUIRE(!paths.empty());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      CHECK(is_simple_path(paths[i]));
      CHECK(paths[i].front() == s);
      CHECK(paths[i].back() == t);
      CHECK(path_links(topo, paths[i]).has_value());
      for (std::size_t j = i + 1; j < paths.size(); ++j) CHECK(paths[i] != paths[j]);
    }
    // Determinism: a second run returns the identical list.
    CHECK(paths == k_shortest_paths(topo, s, t, 4));
  }
}

TEST_CASE("k_shortest_paths rejects degenerate queries") {
  const Topology topo = fig1_topology();
  CHECK_THROWS_AS(k_shortest_paths(topo, 0, 0, 3), ValidationError);
  CHECK_THROWS_AS(k_shortest_paths(topo, 0, 1, 0), ValidationError);
}
