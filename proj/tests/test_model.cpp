#include <doctest.h>

#include "ocn/model.hpp"
#include "test_util.hpp"

using namespace ocn;

namespace {

// The fig1 provisioning pair used across the suite: bypass carries both
// demands end to end, rwca aggregates them at X on one wavelength.
Solution fig1_bypass_solution(const Topology& topo) {
  const NodeId a = *topo.find_node("A"), b = *topo.find_node("B"), x = *topo.find_node("X"),
               c = *topo.find_node("C");
  Solution s;
  s.alone.push_back(AloneAssignment{0, {a, x, c}, 0});
  s.alone.push_back(AloneAssignment{1, {b, x, c}, 1});
  return s;
}

Solution fig1_rwca_solution(const Topology& topo) {
  const NodeId a = *topo.find_node("A"), b = *topo.find_node("B"), x = *topo.find_node("X"),
               c = *topo.find_node("C");
  AggregationCandidate cand{0, 1, x, {a, x}, {b, x}, {x, c}};
  Solution s;
  s.groups.push_back(GroupAssignment::from_candidate(cand, 0));
  return s;
}

}  // namespace

TEST_CASE("modulation formats add up under aggregation") {
  CHECK(bits_per_symbol(ModulationFormat::kQpsk) == 2);
  CHECK(bits_per_symbol(ModulationFormat::kSixteenQam) == 4);
  CHECK(aggregate_format(ModulationFormat::kQpsk, ModulationFormat::kQpsk) ==
        ModulationFormat::kSixteenQam);
  CHECK(bits_per_symbol(aggregate_format(ModulationFormat::kQpsk, ModulationFormat::kQpsk)) ==
        bits_per_symbol(ModulationFormat::kQpsk) + bits_per_symbol(ModulationFormat::kQpsk));
  CHECK_THROWS_AS(aggregate_format(ModulationFormat::kSixteenQam, ModulationFormat::kQpsk),
                  ValidationError);
}

TEST_CASE("solution_metrics matches the worked example costs") {
  const Topology topo = fig1_topology();
  CHECK(solution_metrics(fig1_bypass_solution(topo)) == Metrics{4, 2});
  CHECK(solution_metrics(fig1_rwca_solution(topo)) == Metrics{3, 1});
  CHECK(solution_metrics(Solution{}) == Metrics{0, 0});
}

TEST_CASE("group solutions expand to three lightpaths with format addition") {
  const Topology topo = fig1_topology();
  const auto lightpaths = solution_lightpaths(fig1_rwca_solution(topo));
  REQUIRE(lightpaths.size() == 3);
  CHECK(lightpaths[0].format == ModulationFormat::kQpsk);
  CHECK(lightpaths[1].format == ModulationFormat::kQpsk);
  CHECK(lightpaths[2].format == ModulationFormat::kSixteenQam);
  CHECK(lightpaths[2].carried_demands == std::vector<int>{0, 1});
  for (const auto& lp : lightpaths) {
    CHECK((lp.carried_demands.size() == 2) ==
          (lp.format == ModulationFormat::kSixteenQam));
  }
}

TEST_CASE("relative_gain arithmetic and edge cases") {
  CHECK(relative_gain(4, 3) == doctest::Approx(25.0));
  CHECK(relative_gain(10, 8) == doctest::Approx(20.0));
  for (long long c : {1, 7, 1000}) CHECK(relative_gain(c, c) == 0.0);
  CHECK_THROWS_AS(relative_gain(0, 0), ValidationError);
  CHECK_THROWS_AS(relative_gain(3, 4), ValidationError);
}

TEST_CASE("relative_gain is antitone in the rwca cost") {
  double previous = relative_gain(10, 10);
  for (long long rwca = 9; rwca >= 0; --rwca) {
    const double gain = relative_gain(10, rwca);
    CHECK(gain > previous);
    previous = gain;
  }
}

TEST_CASE("instance validation catches bad demands") {
  Topology topo = fig1_topology();
  Demand bad;
  bad.id = 0;
  bad.source = 0;
  bad.destination = 0;
  CHECK_THROWS_WITH_AS(Instance::create(topo, {bad}, 3, 2),
                       doctest::Contains("equal source and destination"), ValidationError);

  Demand d0, d1;
  d0.id = 7;
  d0.source = 0;
  d0.destination = 3;
  d1 = d0;
  CHECK_THROWS_WITH_AS(Instance::create(topo, {d0, d1}, 3, 2),
                       doctest::Contains("duplicate demand id"), ValidationError);

  d1.id = 8;
  d1.destination = 99;
  CHECK_THROWS_WITH_AS(Instance::create(topo, {d0, d1}, 3, 2),
                       doctest::Contains("outside the topology"), ValidationError);

  CHECK_THROWS_AS(Instance::create(topo, {d0}, 0, 2), ValidationError);

  // Auto capacity gives one wavelength per demand.
  const Instance instance = test::fig1_instance(3, 0);
  CHECK(instance.wavelength_capacity == 2);
  CHECK(instance.demand_index(1) == 1);
  CHECK(instance.demand_index(99) == -1);
}
