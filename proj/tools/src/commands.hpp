#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamdec/instance_gen.hpp"
#include "hamdec/orchestrator.hpp"
#include "results.hpp"

namespace hamdec::cli {

struct GenerateArgs {
  InstanceSpec spec;  // spec.seed is the base seed
  int count = 1;
  std::filesystem::path out_dir;
};

// Writes `count` instance files named <kind>-n<n>-<u|d>-<index>.json, instance
// i generated from seed + i, plus manifest.json listing file names and seeds.
// Returns the instance paths.
std::vector<std::filesystem::path> cmd_generate(const GenerateArgs& args);

struct SolveArgs {
  std::filesystem::path instance_path;
  Algorithm algorithm = Algorithm::Dfj;
  RunOptions options;
  std::optional<std::filesystem::path> export_lp;
  std::optional<std::filesystem::path> out_csv;  // appended; header if new
  std::optional<std::filesystem::path> witness;  // sidecar path override
  bool mask_time = false;
};

// The sidecar defaults to <instance stem>.<algorithm>.witness.json next to
// the CSV, or next to the instance when no CSV is given. Written only for
// feasible verdicts.
std::filesystem::path default_witness_path(const SolveArgs& args);

ResultRow cmd_solve(const SolveArgs& args, std::ostream& log);

struct ExperimentSet {
  InstanceKind kind = InstanceKind::RandomPermutation;
  int n = 0;
  int count = 0;
  bool directed = false;
  std::vector<Algorithm> algorithms;
  std::uint64_t seed = 0;
  // Wall-clock budget shared by all runs of the set; instance i runs with
  // whatever remains of it, capped by instance_time_limit_ms when present.
  std::optional<std::int64_t> per_set_time_limit_ms;
  std::optional<std::int64_t> instance_time_limit_ms;
  HeuristicParams params;
};

// Either {"sets": [...]} or a bare list of sets. Each set:
//   {"kind", "n", "count", "directed", "algorithms", "seed",
//    "per_set_time_limit_ms"?, "time_limit_ms"?, "attempt_limit"?,
//    "depth_limit"?}
// Throws InputError on malformed configs.
std::vector<ExperimentSet> parse_experiment_config(const nlohmann::json& doc);

struct ExperimentOptions {
  int threads = 1;
  bool mask_time = false;
  // Called for every run in completion order (serialised).
  std::function<void(const ResultRow&, const RunResult&)> on_run;
};

// Runs every (set, instance, algorithm) cell. Instance i of a set is
// generated from seed + i and every heuristic run uses the same seed. Rows
// come back in (set, instance, algorithm) order whatever the thread count.
std::vector<ResultRow> run_experiment(const std::vector<ExperimentSet>& sets,
                                      const ExperimentOptions& options);

// HAMDEC_THREADS if set and positive, else the hardware concurrency.
int default_thread_count();

std::string csv_document(const std::vector<ResultRow>& rows);

// "<count> decomposition(s); second exists|does not exist" followed by the
// witness cycles when one exists.
std::string cmd_oracle(const std::filesystem::path& instance_path);

}  // namespace hamdec::cli
