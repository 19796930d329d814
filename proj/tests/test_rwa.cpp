#include <doctest.h>

#include "ocn/oracle.hpp"
#include "ocn/rwa.hpp"
#include "ocn/verifier.hpp"
#include "test_util.hpp"

using namespace ocn;

TEST_CASE("exact bypass reproduces the two-demand example") {
  const Instance instance = test::fig1_instance();
  const SolveResult result = solve_rwa_exact(instance);
  REQUIRE(result.status == SolveStatus::kOptimal);
  REQUIRE(result.solution.has_value());
  const Metrics metrics = solution_metrics(*result.solution);
  CHECK(metrics.wavelength_links == 4);
  CHECK(metrics.distinct_wavelengths == 2);
  CHECK(result.lower_bound == doctest::Approx(4.0));
  CHECK(verify_solution(instance, *result.solution).ok());
}

TEST_CASE("a single demand rides its shortest path") {
  Topology topo = fig1_topology();
  Demand d;
  d.id = 0;
  d.source = topo.node_or_throw("A");
  d.destination = topo.node_or_throw("C");
  const Instance instance = Instance::create(std::move(topo), {d}, 3, 1);
  const SolveResult result = solve_rwa_exact(instance);
  REQUIRE(result.status == SolveStatus::kOptimal);
  CHECK(result.cost() == 2);
  CHECK(solution_metrics(*result.solution).distinct_wavelengths == 1);
}

TEST_CASE("one wavelength cannot carry both demands over X-C") {
  const Instance instance = test::fig1_instance(3, 1);
  const SolveResult result = solve_rwa_exact(instance);
  CHECK(result.status == SolveStatus::kInfeasible);
  CHECK(!result.solution.has_value());
  CHECK(solve_rwa_first_fit(instance) == std::nullopt);
}

TEST_CASE("first-fit routes the example at cost 4 on wavelengths 0 and 1") {
  const Instance instance = test::fig1_instance();
  const auto solution = solve_rwa_first_fit(instance);
  REQUIRE(solution.has_value());
  CHECK(solution_metrics(*solution) == Metrics{4, 2});
  CHECK(solution->alone[0].wavelength == 0);
  CHECK(solution->alone[1].wavelength == 1);
  CHECK(verify_solution(instance, *solution).ok());
}

TEST_CASE("first-fit on an empty demand set returns an empty solution") {
  const Instance instance = Instance::create(fig1_topology(), {}, 3, 0);
  const auto solution = solve_rwa_first_fit(instance);
  REQUIRE(solution.has_value());
  CHECK(solution->empty());
  CHECK(solution_metrics(*solution) == Metrics{0, 0});

  const SolveResult exact = solve_rwa_exact(instance);
  CHECK(exact.status == SolveStatus::kOptimal);
  CHECK(exact.cost() == 0);
}

TEST_CASE("exact never loses to first-fit and never fails with ample capacity") {
  SplitMix64 rng(11);
  for (int round = 0; round < 30; ++round) {
    Instance instance = test::random_instance(rng, false, 6, 5, 1, 3);
    instance.wavelength_capacity = static_cast<int>(instance.demands.size()) + 1;
    const auto first_fit = solve_rwa_first_fit(instance);
    REQUIRE(first_fit.has_value());
    CHECK(verify_solution(instance, *first_fit).ok());

    const SolveResult exact = solve_rwa_exact(instance);
    REQUIRE(exact.status == SolveStatus::kOptimal);
    CHECK(verify_solution(instance, *exact.solution).ok());
    CHECK(exact.cost() <= solution_metrics(*first_fit).wavelength_links);
    CHECK(exact.cost() >= exact.lower_bound);
  }
}

TEST_CASE("both first-fit orderings produce verifiable solutions") {
  SplitMix64 rng(12);
  for (int round = 0; round < 10; ++round) {
    Instance instance = test::random_instance(rng, false, 6, 5, 1, 3);
    instance.wavelength_capacity = static_cast<int>(instance.demands.size());
    for (auto ordering : {FirstFitOrdering::kById, FirstFitOrdering::kByLongestPath}) {
      const auto solution = solve_rwa_first_fit(instance, ordering);
      REQUIRE(solution.has_value());
      CHECK(verify_solution(instance, *solution).ok());
    }
  }
}

TEST_CASE("optimal cost is invariant under demand reordering") {
  SplitMix64 rng(13);
  for (int round = 0; round < 10; ++round) {
    const Instance instance = test::random_instance(rng, false, 5, 4, 4, 8);
    const SolveResult forward = solve_rwa_exact(instance);

    std::vector<Demand> reversed(instance.demands.rbegin(), instance.demands.rend());
    const Instance flipped = Instance::create(instance.topology, reversed, instance.k_paths,
                                              instance.wavelength_capacity);
    const SolveResult backward = solve_rwa_exact(flipped);
    REQUIRE(forward.status == backward.status);
    if (forward.status == SolveStatus::kOptimal) {
      CHECK(forward.cost() == backward.cost());
    }
  }
}

TEST_CASE("node budget of one forces LimitExceeded") {
  // W=1 makes first-fit fail, so the search must actually run and the budget
  // stops it before it can prove infeasibility.
  const Instance instance = test::fig1_instance(3, 1);
  SolveLimits limits;
  limits.node_budget = 1;
  const SolveResult result = solve_rwa_exact(instance, limits);
  CHECK(result.status == SolveStatus::kLimitExceeded);
  CHECK(!result.solution.has_value());
  CHECK(result.lower_bound == doctest::Approx(4.0));
}

TEST_CASE("an expired time budget reports LimitExceeded") {
  const Instance instance = test::fig1_instance(3, 1);
  SolveLimits limits;
  limits.time_budget_seconds = 1e-9;
  const SolveResult result = solve_rwa_exact(instance, limits);
  CHECK(result.status == SolveStatus::kLimitExceeded);
}

TEST_CASE("solve limits must be positive") {
  const Instance instance = test::fig1_instance();
  SolveLimits limits;
  limits.time_budget_seconds = 0;
  CHECK_THROWS_AS(solve_rwa_exact(instance, limits), ValidationError);
}
