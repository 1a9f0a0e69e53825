#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hamdec/errors.hpp"
#include "instance_io.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kIoError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace hamdec;
  using namespace hamdec::cli;
  namespace fs = std::filesystem;

  CLI::App app{"Second Hamiltonian decomposition solver"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Write random instances");
  std::string kind_text = "permutation";
  GenerateArgs gen;
  generate->add_option("--kind", kind_text,
                       "permutation | pyramidal | four-peak")
      ->capture_default_str();
  generate->add_option("-n,--n", gen.spec.n, "Vertex count")->required();
  generate->add_option("--count", gen.count, "Number of instances")
      ->capture_default_str();
  generate->add_option("--seed", gen.spec.seed, "Base seed; instance i uses seed + i")
      ->capture_default_str();
  generate->add_flag("--directed", gen.spec.directed, "Directed cycles");
  std::string out_dir;
  generate->add_option("--out", out_dir, "Output directory")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  SolveArgs sargs;
  std::string instance_path;
  std::string algorithm_text = "dfj";
  std::int64_t time_limit_ms = 60'000;
  std::string export_lp, csv_path, witness_path;
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  solve->add_option("-a,--algorithm", algorithm_text,
                    "dfj | mtz | dfj-ls | dfj-vnd | dfj-vnd-fix")
      ->capture_default_str();
  solve->add_option("--time-limit-ms", time_limit_ms, "Wall-clock budget")
      ->capture_default_str();
  solve->add_option("--seed", sargs.options.seed, "Heuristic seed")
      ->capture_default_str();
  solve->add_option("--attempt-limit", sargs.options.params.attempt_limit,
                    "Random repair attempts per move")
      ->capture_default_str();
  solve->add_option("--depth-limit", sargs.options.params.depth_limit,
                    "Bounded search tree depth")
      ->capture_default_str();
  solve->add_option("--export-lp", export_lp, "Write the final model as LP");
  solve->add_option("--csv", csv_path, "Append the result row to this CSV");
  solve->add_option("--witness", witness_path, "Witness sidecar path");
  solve->add_flag("--mask-time", sargs.mask_time,
                  "Write '-' instead of the elapsed time");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run an experiment grid");
  std::string config_path, experiment_csv;
  ExperimentOptions eopts;
  eopts.threads = default_thread_count();
  experiment->add_option("config", config_path, "Experiment config JSON")
      ->required();
  experiment->add_option("--csv", experiment_csv,
                         "Write all rows here (default: stdout)");
  experiment->add_option("--threads", eopts.threads,
                         "Parallel runs (default: HAMDEC_THREADS or cores)");
  experiment->add_flag("--mask-time", eopts.mask_time,
                       "Write '-' instead of elapsed times");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Enumerate all decompositions");
  std::string oracle_path;
  oracle->add_option("instance", oracle_path, "Instance JSON (n <= 14)")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Re-validate a witness sidecar");
  std::string verify_instance, verify_witness;
  verify->add_option("instance", verify_instance, "Instance JSON")->required();
  verify->add_option("witness", verify_witness, "Witness JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*generate) {
      const auto kind = parse_instance_kind(kind_text);
      if (!kind) throw InputError("unknown instance kind \"" + kind_text + "\"");
      gen.spec.kind = *kind;
      gen.out_dir = out_dir;
      const auto paths = cmd_generate(gen);
      std::cout << "wrote " << paths.size() << " instances to " << out_dir
                << '\n';
    } else if (*solve) {
      const auto algorithm = parse_algorithm(algorithm_text);
      if (!algorithm) {
        throw InputError("unknown algorithm \"" + algorithm_text + "\"");
      }
      if (time_limit_ms < 0) throw InputError("time limit must be non-negative");
      validate(sargs.options.params);
      sargs.instance_path = instance_path;
      sargs.algorithm = *algorithm;
      sargs.options.budget = std::chrono::milliseconds(time_limit_ms);
      if (!export_lp.empty()) sargs.export_lp = export_lp;
      if (!csv_path.empty()) sargs.out_csv = csv_path;
      if (!witness_path.empty()) sargs.witness = witness_path;
      const ResultRow row = cmd_solve(sargs, std::cerr);
      if (!sargs.out_csv) std::cout << csv_header() << '\n';
      std::cout << to_csv(row) << '\n';
    } else if (*experiment) {
      const auto sets = parse_experiment_config(read_json(config_path));
      const auto rows = run_experiment(sets, eopts);
      const std::string csv = csv_document(rows);
      if (experiment_csv.empty()) {
        std::cout << csv;
        std::cerr << format_summary(summarize(rows));
      } else {
        write_text(experiment_csv, csv);
        std::cout << format_summary(summarize(rows));
      }
    } else if (*oracle) {
      std::cout << cmd_oracle(oracle_path);
    } else if (*verify) {
      const Instance inst = load_instance(verify_instance);
      load_witness(verify_witness, inst);
      std::cout << "witness is a valid second decomposition\n";
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
