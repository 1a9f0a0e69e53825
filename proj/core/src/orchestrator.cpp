#include "hamdec/orchestrator.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include "hamdec/errors.hpp"

namespace hamdec {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Feasible:
      return "feasible";
    case Verdict::Infeasible:
      return "infeasible";
    case Verdict::TimedOut:
      return "timeout";
  }
  return "timeout";
}

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kAlgorithms{{
    {Algorithm::Dfj, "dfj"},
    {Algorithm::Mtz, "mtz"},
    {Algorithm::DfjLs, "dfj-ls"},
    {Algorithm::DfjVnd, "dfj-vnd"},
    {Algorithm::DfjVndFix, "dfj-vnd-fix"},
}};

using Clock = std::chrono::steady_clock;

Verdict verdict_of(ilp::SolveStatus status) {
  switch (status) {
    case ilp::SolveStatus::Feasible:
      return Verdict::Feasible;
    case ilp::SolveStatus::Infeasible:
      return Verdict::Infeasible;
    case ilp::SolveStatus::TimedOut:
      return Verdict::TimedOut;
  }
  return Verdict::TimedOut;
}

Witness witness_of(const TwoFactorPair& pair) {
  return Witness{factor_cycle(pair, Side::Z), factor_cycle(pair, Side::W)};
}

// The DFJ model plus the set of subtour cuts already in it.
class CutLoop {
 public:
  CutLoop(const UnionMultigraph& g, Algorithm algorithm,
          std::chrono::milliseconds budget)
      : g_(g),
        start_(Clock::now()),
        deadline_(start_ + budget),
        dfj_(build_dfj_base(g)) {
    result_.algorithm = algorithm;
  }

  Clock::time_point deadline() const { return deadline_; }

  // One solver call. Returns the decoded pair when feasible; otherwise
  // records the verdict.
  std::optional<TwoFactorPair> solve() {
    ++result_.iterations;
    const ilp::SolveOutcome outcome = ilp::solve(dfj_.model, deadline_);
    result_.solver_nodes += outcome.stats.nodes;
    if (outcome.status != ilp::SolveStatus::Feasible) {
      result_.verdict = verdict_of(outcome.status);
      return std::nullopt;
    }
    return decode(outcome.assignment, dfj_.mapping, g_);
  }

  void add_cuts(const ComponentReport& report) {
    for (const auto& s : report.z_subtours) add_cuts_for(s);
    for (const auto& s : report.w_subtours) add_cuts_for(s);
  }

  RunResult finish(std::optional<Witness> witness) {
    if (witness) {
      result_.verdict = Verdict::Feasible;
      result_.witness = std::move(witness);
    }
    result_.elapsed = Clock::now() - start_;
    result_.final_model = std::move(dfj_.model);
    return std::move(result_);
  }

  RunResult& result() { return result_; }

 private:
  // Both cuts for a proper subset S; a factor that is one Hamiltonian cycle
  // reports S = V, which yields nothing.
  void add_cuts_for(const std::vector<Vertex>& subset) {
    if (static_cast<int>(subset.size()) == g_.n()) return;
    for (Side side : {Side::Z, Side::W}) {
      if (!seen_.emplace(subset, side).second) continue;
      ilp::LinearConstraint cut = sec_for_subtour(g_, dfj_.mapping, subset, side);
      const std::size_t index = dfj_.model.add_constraint(cut);
      result_.cuts.push_back(dfj_.model.constraints()[index]);
      ++result_.cuts_added;
    }
  }

  const UnionMultigraph& g_;
  Clock::time_point start_;
  Clock::time_point deadline_;
  DfjModel dfj_;
  std::set<std::pair<std::vector<Vertex>, Side>> seen_;
  RunResult result_;
};

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [tag, name] : kAlgorithms) {
    if (tag == algorithm) return name;
  }
  return "dfj";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  for (const auto& [tag, name] : kAlgorithms) {
    if (name == text) return tag;
  }
  return std::nullopt;
}

bool supports(Algorithm algorithm, bool directed) {
  switch (algorithm) {
    case Algorithm::DfjLs:
      return directed;
    case Algorithm::DfjVnd:
    case Algorithm::DfjVndFix:
      return !directed;
    default:
      return true;
  }
}

RunResult solve_dfj(const UnionMultigraph& g, const HamCycle& x,
                    const HamCycle& y, std::chrono::milliseconds budget) {
  CutLoop loop(g, Algorithm::Dfj, budget);
  while (auto pair = loop.solve()) {
    const ComponentReport report = components(*pair);
    if (report.total() == 2) {
      if (!is_second_decomposition(*pair, x, y)) {
        throw ContractError("solver returned the given decomposition");
      }
      return loop.finish(witness_of(*pair));
    }
    loop.add_cuts(report);
  }
  return loop.finish(std::nullopt);
}

RunResult solve_dfj_heuristic(const UnionMultigraph& g, const HamCycle& x,
                              const HamCycle& y, const RunOptions& options) {
  const Algorithm tag = g.directed() ? Algorithm::DfjLs
                        : options.params.chain_fixing ? Algorithm::DfjVndFix
                                                      : Algorithm::DfjVnd;
  CutLoop loop(g, tag, options.budget);
  Rng rng(options.seed);
  while (auto pair = loop.solve()) {
    ComponentReport report = components(*pair);
    if (report.total() == 2) {
      if (!is_second_decomposition(*pair, x, y)) {
        throw ContractError("solver returned the given decomposition");
      }
      return loop.finish(witness_of(*pair));
    }
    loop.add_cuts(report);

    HeuristicTrace& trace = loop.result().traces.emplace_back();
    SearchContext ctx{rng, options.params,
                      [&loop](const ComponentReport& r) { loop.add_cuts(r); },
                      &trace, loop.deadline()};
    if (g.directed()) {
      local_search_directed(*pair, ctx);
    } else {
      vnd_undirected(*pair, ctx);
    }
    if (is_second_decomposition(*pair, x, y)) {
      return loop.finish(witness_of(*pair));
    }
    if (Clock::now() >= loop.deadline()) {
      loop.result().verdict = Verdict::TimedOut;
      break;
    }
  }
  return loop.finish(std::nullopt);
}

RunResult solve_mtz(const UnionMultigraph& g, const HamCycle& x,
                    const HamCycle& y, std::chrono::milliseconds budget) {
  const auto start = Clock::now();
  MtzModel mtz = g.directed() ? build_mtz_directed(g) : build_mtz_undirected(g);
  RunResult result;
  result.algorithm = Algorithm::Mtz;
  result.iterations = 1;
  const ilp::SolveOutcome outcome = ilp::solve(mtz.model, start + budget);
  result.solver_nodes = outcome.stats.nodes;
  result.verdict = verdict_of(outcome.status);
  if (outcome.status == ilp::SolveStatus::Feasible) {
    const TwoFactorPair pair = decode(outcome.assignment, mtz.mapping, g);
    if (!is_second_decomposition(pair, x, y)) {
      throw ContractError("order model returned no second decomposition");
    }
    result.witness = witness_of(pair);
  }
  result.elapsed = Clock::now() - start;
  result.final_model = std::move(mtz.model);
  return result;
}

RunResult run(Algorithm algorithm, const UnionMultigraph& g, const HamCycle& x,
              const HamCycle& y, const RunOptions& options) {
  if (!supports(algorithm, g.directed())) {
    throw InputError(std::string(to_string(algorithm)) + " does not support " +
                     (g.directed() ? "directed" : "undirected") + " instances");
  }
  switch (algorithm) {
    case Algorithm::Dfj:
      return solve_dfj(g, x, y, options.budget);
    case Algorithm::Mtz:
      return solve_mtz(g, x, y, options.budget);
    case Algorithm::DfjLs:
    case Algorithm::DfjVndFix:
      return solve_dfj_heuristic(g, x, y, options);
    case Algorithm::DfjVnd: {
      RunOptions naive = options;
      naive.params.chain_fixing = false;
      return solve_dfj_heuristic(g, x, y, naive);
    }
  }
  throw InputError("unknown algorithm");
}

}  // namespace hamdec
