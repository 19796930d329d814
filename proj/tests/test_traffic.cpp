#include <doctest.h>

#include <set>

#include "ocn/topologies.hpp"
#include "ocn/traffic.hpp"

using namespace ocn;

TEST_CASE("two-to-all on nsfnet yields 26 demands from two sources") {
  const Topology topo = nsfnet_topology();
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 123456789ULL}) {
    const auto demands = generate_two_to_all(topo, seed);
    REQUIRE(demands.size() == 26);

    std::set<NodeId> sources;
    for (const Demand& d : demands) sources.insert(d.source);
    CHECK(sources.size() == 2);

    // Each source reaches every other node exactly once, itself never.
    for (NodeId source : sources) {
      std::set<NodeId> dests;
      for (const Demand& d : demands) {
        if (d.source == source) dests.insert(d.destination);
      }
      CHECK(dests.size() == 13);
      CHECK(!dests.count(source));
    }
    for (std::size_t i = 0; i < demands.size(); ++i) {
      CHECK(demands[i].id == static_cast<int>(i));
    }
  }
}

TEST_CASE("two-to-all on the four-node graph yields 6 demands") {
  CHECK(generate_two_to_all(fig1_topology(), 7).size() == 6);
}

TEST_CASE("identical seeds reproduce identical demand lists") {
  const Topology topo = nsfnet_topology();
  const auto first = generate_two_to_all(topo, 99);
  const auto second = generate_two_to_all(topo, 99);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].id == second[i].id);
    CHECK(first[i].source == second[i].source);
    CHECK(first[i].destination == second[i].destination);
  }
}

TEST_CASE("different seeds eventually choose different source pairs") {
  const Topology topo = nsfnet_topology();
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto demands = generate_two_to_all(topo, seed);
    pairs.insert({demands.front().source, demands.back().source});
  }
  CHECK(pairs.size() > 1);
}

TEST_CASE("tiny topologies are rejected") {
  const Topology two = Topology::build("two", {"A", "B"}, {{"A", "B"}});
  CHECK_THROWS_AS(generate_two_to_all(two, 1), ValidationError);
}
