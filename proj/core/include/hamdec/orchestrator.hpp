#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hamdec/formulations.hpp"
#include "hamdec/heuristics.hpp"
#include "hamdec/ilp.hpp"
#include "hamdec/multigraph.hpp"

namespace hamdec {

enum class Verdict { Feasible, Infeasible, TimedOut };

// "feasible", "infeasible", "timeout".
std::string_view to_string(Verdict verdict);

enum class Algorithm { Dfj, Mtz, DfjLs, DfjVnd, DfjVndFix };

// "dfj", "mtz", "dfj-ls", "dfj-vnd", "dfj-vnd-fix".
std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view text);

// dfj-ls needs a directed instance, dfj-vnd and dfj-vnd-fix an undirected one.
bool supports(Algorithm algorithm, bool directed);

struct Witness {
  HamCycle z;
  HamCycle w;
};

struct RunResult {
  Algorithm algorithm = Algorithm::Dfj;
  Verdict verdict = Verdict::TimedOut;
  std::optional<Witness> witness;  // present iff Feasible
  int iterations = 0;              // solver calls
  int cuts_added = 0;
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t solver_nodes = 0;

  // Subtour cuts in the order they entered the model.
  std::vector<ilp::LinearConstraint> cuts;
  // One trace per heuristic invocation.
  std::vector<HeuristicTrace> traces;
  // The model as it stood at the last solver call.
  ilp::IlpModel final_model;
};

struct RunOptions {
  std::chrono::milliseconds budget{60'000};
  HeuristicParams params;
  std::uint64_t seed = 0;  // heuristic randomness
};

// Lazy subtour-cut loop: solve, stop on a second decomposition, otherwise add
// both subtour cuts for every component of either factor and solve again.
RunResult solve_dfj(const UnionMultigraph& g, const HamCycle& x,
                    const HamCycle& y, std::chrono::milliseconds budget);

// The cut loop with a heuristic after every solver call that did not already
// give a decomposition: directed local search on directed instances, VND on
// undirected ones (chain fixing as configured in options.params). Cuts for
// every intermediate state the heuristic accepts join the model before the
// next solver call. Heuristic runs do not count as iterations.
RunResult solve_dfj_heuristic(const UnionMultigraph& g, const HamCycle& x,
                              const HamCycle& y, const RunOptions& options);

// One solve of the order-variable model.
RunResult solve_mtz(const UnionMultigraph& g, const HamCycle& x,
                    const HamCycle& y, std::chrono::milliseconds budget);

// Dispatches on the algorithm tag. Throws InputError when the algorithm does
// not support the instance's directedness.
RunResult run(Algorithm algorithm, const UnionMultigraph& g, const HamCycle& x,
              const HamCycle& y, const RunOptions& options);

}  // namespace hamdec
