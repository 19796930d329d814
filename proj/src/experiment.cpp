#include "ocn/experiment.hpp"

#include <algorithm>

#include "ocn/json_io.hpp"
#include "ocn/rwa.hpp"
#include "ocn/rwca.hpp"
#include "ocn/topologies.hpp"
#include "ocn/traffic.hpp"
#include "ocn/verifier.hpp"

namespace ocn {
namespace {

void verify_or_throw(const Instance& instance, const Solution& solution, const char* what) {
  const auto verdict = verify_solution(instance, solution);
  if (!verdict.ok()) {
    std::string message = std::string(what) + " solution failed verification:";
    for (const auto& v : verdict.violations) {
      message += std::string(" [") + to_string(v.kind) + "] " + v.detail;
    }
    throw std::logic_error(message);
  }
}

}  // namespace

const char* to_string(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::kExact: return "exact";
    case SolverChoice::kHeuristic: return "heuristic";
    case SolverChoice::kAuto: return "auto";
  }
  return "unknown";
}

Topology resolve_topology(const std::string& spec) {
  if (auto builtin = builtin_topology(spec)) return std::move(*builtin);
  return load_topology_file(spec);
}

GainRecord run_sample(const Instance& instance, int sample, std::uint64_t seed,
                      SolverChoice solver, const SolveLimits& limits) {
  GainRecord record;
  record.sample = sample;
  record.seed = seed;
  if (!instance.demands.empty()) {
    const Topology& topo = instance.topology;
    record.source_a = topo.node_name(instance.demands.front().source);
    record.source_b = record.source_a;
    for (const Demand& d : instance.demands) {
      if (d.source != instance.demands.front().source) {
        record.source_b = topo.node_name(d.source);
        break;
      }
    }
  }

  std::optional<Solution> bypass;
  if (solver == SolverChoice::kHeuristic) {
    bypass = solve_rwa_first_fit(instance);
    record.bypass_status = bypass ? SolveStatus::kFeasible : SolveStatus::kInfeasible;
  } else {
    SolveResult result = solve_rwa_exact(instance, limits);
    record.bypass_status = result.status;
    record.bypass_seconds = result.wall_seconds;
    bypass = std::move(result.solution);
  }
  if (bypass) {
    verify_or_throw(instance, *bypass, "bypass");
    record.bypass_cost = solution_metrics(*bypass).wavelength_links;
  }

  std::optional<Solution> rwca;
  if (solver == SolverChoice::kHeuristic) {
    rwca = solve_rwca_heuristic(instance);
    record.rwca_status = SolveStatus::kFeasible;
    record.rwca_lower_bound = rwca_lower_bound(instance);
  } else {
    SolveResult result = solve_rwca_exact(instance, limits);
    record.rwca_status = result.status;
    record.rwca_seconds = result.wall_seconds;
    record.rwca_lower_bound = result.lower_bound;
    rwca = std::move(result.solution);
  }
  if (rwca) {
    verify_or_throw(instance, *rwca, "rwca");
    record.rwca_cost = solution_metrics(*rwca).wavelength_links;
  }

  if (record.bypass_cost && record.rwca_cost && *record.bypass_cost > 0) {
    record.relative_gain_pct = relative_gain(*record.bypass_cost, *record.rwca_cost);
    record.relative_gain_max_pct =
        100.0 * (static_cast<double>(*record.bypass_cost) - record.rwca_lower_bound) /
        static_cast<double>(*record.bypass_cost);
  }
  return record;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.samples < 1) {
    throw ValidationError("experiment: samples must be >= 1");
  }
  if (config.time_budget_seconds <= 0) {
    throw ValidationError("experiment: time budget must be positive");
  }
  if (config.k_paths < 1) {
    throw ValidationError("experiment: k_paths must be >= 1");
  }
  if (config.wavelength_capacity < 0) {
    throw ValidationError("experiment: wavelength capacity must be >= 0 (0 = auto)");
  }

  ExperimentResult result;
  result.config = config;
  const Topology topology = resolve_topology(config.topology);
  result.topology_name = topology.name();

  SolveLimits limits;
  limits.time_budget_seconds = config.time_budget_seconds;

  for (int sample = 0; sample < config.samples; ++sample) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(sample);
    GainRecord record;
    try {
      const std::vector<Demand> demands = generate_two_to_all(topology, seed);
      const Instance instance =
          Instance::create(topology, demands, config.k_paths, config.wavelength_capacity);
      record = run_sample(instance, sample, seed, config.solver, limits);
    } catch (const std::exception& e) {
      record.sample = sample;
      record.seed = seed;
      record.error = e.what();
    }
    result.records.push_back(std::move(record));
  }

  ExperimentSummary& summary = result.summary;
  for (const GainRecord& record : result.records) {
    if (record.relative_gain_pct) {
      ++summary.gain_samples;
      summary.mean_gain_pct += *record.relative_gain_pct;
      summary.max_gain_pct = std::max(summary.max_gain_pct, *record.relative_gain_pct);
    }
    if (record.bypass_cost && record.rwca_cost) {
      summary.total_bypass_cost += *record.bypass_cost;
      summary.total_rwca_cost += *record.rwca_cost;
    }
  }
  if (summary.gain_samples > 0) {
    summary.mean_gain_pct /= summary.gain_samples;
  }
  if (summary.total_bypass_cost > 0) {
    summary.pooled_gain_pct =
        relative_gain(summary.total_bypass_cost, summary.total_rwca_cost);
  }
  return result;
}

}  // namespace ocn
