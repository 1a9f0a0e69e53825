#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hamdec/errors.hpp"
#include "hamdec/lp_format.hpp"
#include "hamdec/oracle.hpp"
#include "instance_io.hpp"

namespace hamdec::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string instance_name(const InstanceSpec& spec, int index) {
  return std::string(to_string(spec.kind)) + "-n" + std::to_string(spec.n) +
         (spec.directed ? "-d-" : "-u-") + std::to_string(index);
}

std::string order_text(const HamCycle& c) {
  std::string out;
  for (Vertex v : c.order()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void append_row(const fs::path& csv, const ResultRow& row) {
  const bool fresh = !fs::exists(csv) || fs::file_size(csv) == 0;
  std::ofstream out(csv, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot write " + csv.string());
  if (fresh) out << csv_header() << '\n';
  out << to_csv(row) << '\n';
  if (!out) throw IoError("write failed for " + csv.string());
}

template <typename T>
T field(const json& set, const char* key) {
  if (!set.contains(key)) {
    throw InputError(std::string("experiment set is missing \"") + key + "\"");
  }
  try {
    return set[key].get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("experiment field \"") + key +
                     "\" has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const json& set, const char* key) {
  if (!set.contains(key) || set[key].is_null()) return std::nullopt;
  return field<T>(set, key);
}

}  // namespace

std::vector<fs::path> cmd_generate(const GenerateArgs& args) {
  if (args.count < 0) throw InputError("count must be non-negative");
  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec) throw IoError("cannot create " + args.out_dir.string());
  std::vector<fs::path> paths;
  json manifest{{"kind", to_string(args.spec.kind)},
                {"n", args.spec.n},
                {"directed", args.spec.directed},
                {"seed", args.spec.seed},
                {"count", args.count},
                {"instances", json::array()}};
  for (int i = 0; i < args.count; ++i) {
    InstanceSpec spec = args.spec;
    spec.seed = args.spec.seed + static_cast<std::uint64_t>(i);
    const Instance inst = generate_instance(spec);
    const fs::path path = args.out_dir / (instance_name(args.spec, i) + ".json");
    save_instance(path, inst.x, inst.y);
    manifest["instances"].push_back(
        {{"file", path.filename().string()}, {"seed", spec.seed}});
    paths.push_back(path);
  }
  write_text(args.out_dir / "manifest.json", manifest.dump(2) + "\n");
  return paths;
}

fs::path default_witness_path(const SolveArgs& args) {
  if (args.witness) return *args.witness;
  const fs::path dir = args.out_csv ? args.out_csv->parent_path()
                                    : args.instance_path.parent_path();
  return dir / (args.instance_path.stem().string() + "." +
                std::string(to_string(args.algorithm)) + ".witness.json");
}

ResultRow cmd_solve(const SolveArgs& args, std::ostream& log) {
  const Instance inst = load_instance(args.instance_path);
  const RunResult result =
      run(args.algorithm, inst.graph, inst.x, inst.y, args.options);
  ResultRow row = make_row(args.instance_path.stem().string(), "file",
                           inst.graph, args.options.seed, result,
                           args.mask_time);
  if (args.export_lp) write_text(*args.export_lp, ilp::export_lp(result.final_model));
  if (result.witness) {
    const fs::path sidecar = default_witness_path(args);
    save_witness(sidecar, *result.witness);
    log << "witness: " << sidecar.string() << '\n';
  }
  if (args.out_csv) append_row(*args.out_csv, row);
  return row;
}

std::vector<ExperimentSet> parse_experiment_config(const json& doc) {
  const json* sets = &doc;
  if (doc.is_object()) {
    if (!doc.contains("sets")) throw InputError("config needs \"sets\"");
    sets = &doc["sets"];
  }
  if (!sets->is_array()) throw InputError("experiment sets must be a list");
  std::vector<ExperimentSet> out;
  for (const json& s : *sets) {
    if (!s.is_object()) throw InputError("experiment set must be an object");
    ExperimentSet set;
    const auto kind = parse_instance_kind(field<std::string>(s, "kind"));
    if (!kind) throw InputError("unknown instance kind in experiment config");
    set.kind = *kind;
    set.n = field<int>(s, "n");
    set.count = field<int>(s, "count");
    set.directed = field<bool>(s, "directed");
    set.seed = field<std::uint64_t>(s, "seed");
    if (set.count < 0) throw InputError("count must be non-negative");
    for (const auto& name : field<std::vector<std::string>>(s, "algorithms")) {
      const auto algorithm = parse_algorithm(name);
      if (!algorithm) throw InputError("unknown algorithm \"" + name + "\"");
      if (!supports(*algorithm, set.directed)) {
        throw InputError(name + " does not support " +
                         (set.directed ? "directed" : "undirected") +
                         " instances");
      }
      set.algorithms.push_back(*algorithm);
    }
    set.per_set_time_limit_ms =
        optional_field<std::int64_t>(s, "per_set_time_limit_ms");
    set.instance_time_limit_ms = optional_field<std::int64_t>(s, "time_limit_ms");
    if (auto a = optional_field<int>(s, "attempt_limit")) set.params.attempt_limit = *a;
    if (auto d = optional_field<int>(s, "depth_limit")) set.params.depth_limit = *d;
    validate(set.params);
    out.push_back(std::move(set));
  }
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("HAMDEC_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ResultRow> run_experiment(const std::vector<ExperimentSet>& sets,
                                      const ExperimentOptions& options) {
  using Clock = std::chrono::steady_clock;
  struct Task {
    std::size_t set;
    int instance;
    std::size_t algorithm;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int i = 0; i < sets[s].count; ++i) {
      for (std::size_t a = 0; a < sets[s].algorithms.size(); ++a) {
        tasks.push_back(Task{s, i, a});
      }
    }
  }

  std::vector<ResultRow> rows(tasks.size());
  std::vector<std::optional<Clock::time_point>> set_start(sets.size());
  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto run_task = [&](std::size_t t) {
    const Task& task = tasks[t];
    const ExperimentSet& set = sets[task.set];
    InstanceSpec spec{set.kind, set.n, set.directed,
                      set.seed + static_cast<std::uint64_t>(task.instance)};
    const Instance inst = generate_instance(spec);

    std::chrono::milliseconds budget{24LL * 3600 * 1000};
    if (set.instance_time_limit_ms) {
      budget = std::chrono::milliseconds(*set.instance_time_limit_ms);
    }
    if (set.per_set_time_limit_ms) {
      Clock::time_point start;
      {
        std::lock_guard lock(mutex);
        if (!set_start[task.set]) set_start[task.set] = Clock::now();
        start = *set_start[task.set];
      }
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          start + std::chrono::milliseconds(*set.per_set_time_limit_ms) -
          Clock::now());
      budget = std::min(budget, std::max(left, std::chrono::milliseconds(0)));
    }

    RunOptions run_options;
    run_options.budget = budget;
    run_options.params = set.params;
    run_options.seed = spec.seed;
    const Algorithm algorithm = set.algorithms[task.algorithm];
    const RunResult result = run(algorithm, inst.graph, inst.x, inst.y, run_options);
    ResultRow row = make_row(instance_name(spec, task.instance),
                             std::string(to_string(set.kind)), inst.graph,
                             spec.seed, result, options.mask_time);
    std::lock_guard lock(mutex);
    rows[t] = row;
    if (options.on_run) options.on_run(row, result);
  };
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        run_task(t);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };

  const int threads = std::clamp<int>(options.threads, 1,
                                      static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string csv_document(const std::vector<ResultRow>& rows) {
  std::string out(csv_header());
  out += '\n';
  for (const ResultRow& row : rows) out += to_csv(row) + '\n';
  return out;
}

std::string cmd_oracle(const fs::path& instance_path) {
  const Instance inst = load_instance(instance_path);
  const OracleReport report =
      has_second_decomposition(inst.graph, inst.x, inst.y);
  std::ostringstream out;
  out << report.decompositions
      << (report.decompositions == 1 ? " decomposition; " : " decompositions; ")
      << (report.second_exists() ? "second exists" : "second does not exist")
      << '\n';
  if (report.second) {
    out << "z: " << order_text(report.second->first) << '\n'
        << "w: " << order_text(report.second->second) << '\n';
  }
  return out.str();
}

}  // namespace hamdec::cli
