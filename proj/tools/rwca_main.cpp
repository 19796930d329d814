// rwca: provisioning study tool for optical transport networks.
//
// Compares classical optical-bypass routing and wavelength assignment against
// the optical-computing-enabled variant in which two lightpaths that share a
// destination can be optically aggregated onto one wavelength at an
// intermediate node. Subcommands: bench, solve, verify, gen.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ocn/experiment.hpp"
#include "ocn/json_io.hpp"
#include "ocn/oracle.hpp"
#include "ocn/rwa.hpp"
#include "ocn/rwca.hpp"
#include "ocn/topologies.hpp"
#include "ocn/traffic.hpp"
#include "ocn/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

double env_time_budget(double fallback) {
  if (const char* env = std::getenv("RWCA_TIME_BUDGET")) {
    try {
      const double value = std::stod(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid RWCA_TIME_BUDGET value \"" << env << "\"\n";
  }
  return fallback;
}

ocn::SolverChoice parse_solver(const std::string& name) {
  if (name == "exact") return ocn::SolverChoice::kExact;
  if (name == "heuristic") return ocn::SolverChoice::kHeuristic;
  if (name == "auto") return ocn::SolverChoice::kAuto;
  throw ocn::ValidationError("unknown solver \"" + name + "\" (exact|heuristic|auto)");
}

void emit(const nlohmann::ordered_json& payload, const std::string& out_path) {
  const std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    ocn::write_text_file(out_path, text);
  }
}

int cmd_bench(const std::string& topology, int samples, std::uint64_t seed, int k,
              const std::string& solver, int wavelengths, double budget,
              const std::string& out_dir, const std::string& formats_csv) {
  ocn::ExperimentConfig config;
  config.topology = topology;
  config.samples = samples;
  config.seed = seed;
  config.k_paths = k;
  config.solver = parse_solver(solver);
  config.wavelength_capacity = wavelengths;
  config.time_budget_seconds = env_time_budget(budget);

  std::set<ocn::ReportFormat> formats;
  std::stringstream ss(formats_csv);
  for (std::string token; std::getline(ss, token, ',');) {
    if (token == "csv") formats.insert(ocn::ReportFormat::kCsv);
    else if (token == "json") formats.insert(ocn::ReportFormat::kJson);
    else if (token == "svg") formats.insert(ocn::ReportFormat::kSvg);
    else throw ocn::ValidationError("unknown report format \"" + token + "\"");
  }

  const ocn::ExperimentResult result = ocn::run_experiment(config);
  for (const ocn::GainRecord& r : result.records) {
    std::cout << "sample " << r.sample << " seed " << r.seed;
    if (!r.error.empty()) {
      std::cout << " failed: " << r.error << "\n";
      continue;
    }
    std::cout << " sources (" << r.source_a << "," << r.source_b << ")";
    if (r.bypass_cost) std::cout << " bypass " << *r.bypass_cost;
    if (r.rwca_cost) std::cout << " rwca " << *r.rwca_cost;
    if (r.relative_gain_pct) {
      std::cout << " gain " << ocn::format_fixed(*r.relative_gain_pct, 2) << "%";
    }
    std::cout << " [" << to_string(r.bypass_status) << "/" << to_string(r.rwca_status) << "]"
              << " (" << ocn::format_fixed(r.bypass_seconds + r.rwca_seconds, 2) << "s)\n";
  }
  std::cout << "mean gain " << ocn::format_fixed(result.summary.mean_gain_pct, 2)
            << "%, max gain " << ocn::format_fixed(result.summary.max_gain_pct, 2)
            << "%, pooled gain " << ocn::format_fixed(result.summary.pooled_gain_pct, 2)
            << "%\n";
  const auto written = ocn::emit_report(result, out_dir, formats);
  for (const auto& path : written) std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& instance_path, const std::string& mode,
              const std::string& solver, double budget, const std::string& out_path) {
  const ocn::Instance instance = ocn::load_instance_file(instance_path);
  ocn::SolveLimits limits;
  limits.time_budget_seconds = env_time_budget(budget);
  const ocn::SolverChoice choice = parse_solver(solver);

  ocn::SolveResult result;
  if (mode == "bypass") {
    if (choice == ocn::SolverChoice::kHeuristic) {
      auto solution = ocn::solve_rwa_first_fit(instance);
      result.status = solution ? ocn::SolveStatus::kFeasible : ocn::SolveStatus::kInfeasible;
      result.solution = std::move(solution);
    } else {
      result = ocn::solve_rwa_exact(instance, limits);
    }
  } else if (mode == "rwca") {
    if (choice == ocn::SolverChoice::kHeuristic) {
      result.solution = ocn::solve_rwca_heuristic(instance);
      result.status = ocn::SolveStatus::kFeasible;
      result.lower_bound = ocn::rwca_lower_bound(instance);
    } else {
      result = ocn::solve_rwca_exact(instance, limits);
    }
  } else {
    throw ocn::ValidationError("unknown mode \"" + mode + "\" (bypass|rwca)");
  }

  if (result.solution) {
    const auto verdict = ocn::verify_solution(instance, *result.solution);
    if (!verdict.ok()) {
      throw std::logic_error("internal error: solver output failed verification");
    }
  }
  emit(ocn::solve_result_to_json(instance.topology, result, mode), out_path);
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
  const ocn::Instance instance = ocn::load_instance_file(instance_path);
  ocn::Solution solution;
  try {
    solution = ocn::solution_from_json(instance.topology, ocn::load_json_file(solution_path));
  } catch (const nlohmann::json::exception& e) {
    throw ocn::ValidationError("solution file " + solution_path + ": " + e.what());
  }
  const auto verdict = ocn::verify_solution(instance, solution);
  if (verdict.ok()) {
    std::cout << "valid: wavelength_links " << verdict.metrics->wavelength_links
              << ", distinct_wavelengths " << verdict.metrics->distinct_wavelengths << "\n";
    return kExitOk;
  }
  for (const auto& violation : verdict.violations) {
    std::cout << to_string(violation.kind) << ": " << violation.detail << "\n";
  }
  return kExitValidation;
}

int cmd_gen(const std::string& topology_spec, std::uint64_t seed, const std::string& out_path) {
  const ocn::Topology topology = ocn::resolve_topology(topology_spec);
  const auto demands = ocn::generate_two_to_all(topology, seed);
  emit(ocn::demands_to_json(topology, demands), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optical provisioning study: bypass RWA vs aggregation-enabled RWCA"};
  app.require_subcommand(1);

  std::string topology = "nsfnet";
  int samples = 10;
  std::uint64_t seed = 1;
  int k = 3;
  std::string solver = "auto";
  int wavelengths = 0;
  double budget = 300.0;
  std::string out_dir = "out";
  std::string formats = "csv,json,svg";

  CLI::App* bench = app.add_subcommand("bench", "run a two-to-all gain study");
  bench->add_option("--topology", topology, "builtin name (fig1|nsfnet|india) or JSON file");
  bench->add_option("--samples", samples, "number of traffic samples");
  bench->add_option("--seed", seed, "base seed; sample i uses seed+i");
  bench->add_option("--k", k, "candidate paths per endpoint pair");
  bench->add_option("--solver", solver, "exact|heuristic|auto");
  bench->add_option("--wavelengths", wavelengths, "wavelength capacity, 0 = one per demand");
  bench->add_option("--time-budget", budget,
                    "seconds per solve (RWCA_TIME_BUDGET overrides)");
  bench->add_option("--out", out_dir, "output directory");
  bench->add_option("--formats", formats, "comma list of csv,json,svg");

  std::string instance_path, solution_path, mode = "rwca", out_path;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("--instance", instance_path, "instance JSON file")->required();
  solve->add_option("--mode", mode, "bypass|rwca");
  solve->add_option("--solver", solver, "exact|heuristic|auto");
  solve->add_option("--time-budget", budget,
                    "seconds per solve (RWCA_TIME_BUDGET overrides)");
  solve->add_option("--out", out_path, "write solution JSON here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("--instance", instance_path, "instance JSON file")->required();
  verify->add_option("--solution", solution_path, "solution JSON file")->required();

  CLI::App* gen = app.add_subcommand("gen", "emit a two-to-all demand list");
  gen->add_option("--topology", topology, "builtin name or JSON file");
  gen->add_option("--seed", seed, "traffic seed");
  gen->add_option("--out", out_path, "write demand JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) {
      return cmd_bench(topology, samples, seed, k, solver, wavelengths, budget, out_dir,
                       formats);
    }
    if (solve->parsed()) {
      return cmd_solve(instance_path, mode, solver, budget, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(instance_path, solution_path);
    }
    if (gen->parsed()) {
      return cmd_gen(topology, seed, out_path);
    }
  } catch (const ocn::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ocn::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
