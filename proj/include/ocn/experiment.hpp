#pragma once

#include <filesystem>
#include <set>

#include "ocn/solver.hpp"

namespace ocn {

enum class SolverChoice { kExact, kHeuristic, kAuto };

const char* to_string(SolverChoice choice);

struct ExperimentConfig {
  std::string topology = "nsfnet";  // builtin name or path to a topology JSON file
  int samples = 10;
  std::uint64_t seed = 1;
  int k_paths = 3;
  int wavelength_capacity = 0;  // 0 = one wavelength per demand
  SolverChoice solver = SolverChoice::kAuto;
  double time_budget_seconds = 300.0;
};

// Outcome of one traffic sample: both paradigms solved, verified and compared.
// relative_gain_pct compares the returned solutions; relative_gain_max_pct is
// the bracket top against the certified lower bound (they coincide when the
// aggregation-aware solve is optimal).
struct GainRecord {
  int sample = 0;
  std::uint64_t seed = 0;
  std::string source_a;
  std::string source_b;
  std::optional<int> bypass_cost;
  std::optional<int> rwca_cost;
  SolveStatus bypass_status = SolveStatus::kInfeasible;
  SolveStatus rwca_status = SolveStatus::kInfeasible;
  double rwca_lower_bound = 0.0;
  std::optional<double> relative_gain_pct;
  std::optional<double> relative_gain_max_pct;
  double bypass_seconds = 0.0;
  double rwca_seconds = 0.0;
  std::string error;  // non-empty when this sample failed; the run continues
};

struct ExperimentSummary {
  int gain_samples = 0;  // records that produced a gain value
  double mean_gain_pct = 0.0;
  double max_gain_pct = 0.0;
  // Gain over pooled wavelength-links (sum of costs across samples).
  double pooled_gain_pct = 0.0;
  long long total_bypass_cost = 0;
  long long total_rwca_cost = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string topology_name;
  std::vector<GainRecord> records;
  ExperimentSummary summary;
};

// Resolves a builtin topology name, else loads the path as a topology file.
Topology resolve_topology(const std::string& spec);

// Solves one instance both ways, verifies both solutions against the
// independent checker, and fills a GainRecord. The Auto policy runs the exact
// solver under the time budget and reports incumbent plus lower-bound bracket
// when the budget is exceeded.
GainRecord run_sample(const Instance& instance, int sample, std::uint64_t seed,
                      SolverChoice solver, const SolveLimits& limits);

// Generates `samples` two-to-all traffic samples (sample i uses seed
// config.seed + i), runs both paradigms on each and aggregates the summary.
// A failing sample is recorded and the run continues; an unloadable topology
// aborts with an exception.
ExperimentResult run_experiment(const ExperimentConfig& config);

enum class ReportFormat { kCsv, kJson, kSvg };

// Writes report.csv / report.json / gains.svg into out_dir (plus timings.log,
// the only file with non-deterministic content; the report files are
// byte-stable for identical records). Returns the written paths.
std::vector<std::filesystem::path> emit_report(const ExperimentResult& result,
                                               const std::filesystem::path& out_dir,
                                               const std::set<ReportFormat>& formats);

}  // namespace ocn
