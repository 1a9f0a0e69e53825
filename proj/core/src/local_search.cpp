#include <algorithm>

#include "hamdec/errors.hpp"
#include "hamdec/heuristics.hpp"

namespace hamdec {

bool HeuristicTrace::strictly_decreasing() const {
  int previous = initial_objective;
  for (int value : accepted) {
    if (value >= previous) return false;
    previous = value;
  }
  return true;
}

namespace {

// Shared state of one heuristic run over a pair: the undo trail, the current
// objective and the parallel copies that stay fixed throughout.
class Search {
 public:
  Search(TwoFactorPair& pair, SearchContext& ctx) : pair_(pair), ctx_(ctx) {
    validate(ctx.params);
    if (!pair.broken().empty()) {
      throw ContractError("heuristics need a pair without broken vertices");
    }
    objective_ = components(pair).total();
    if (ctx_.trace) ctx_.trace->initial_objective = objective_;
    fix_parallel_copies();
  }

  ~Search() { pair_.unfix_all(); }

  bool solved() const { return objective_ == 2; }
  bool out_of_time() const {
    return std::chrono::steady_clock::now() >= ctx_.deadline;
  }

  // Unfixed Z edges in random order.
  std::vector<EdgeId> shuffled_start_edges() {
    std::vector<EdgeId> edges;
    for (EdgeId e : pair_.edges_on(Side::Z)) {
      if (!pair_.fixed(e)) edges.push_back(e);
    }
    ctx_.rng.shuffle(std::span<EdgeId>(edges));
    return edges;
  }

  FixStatus fix(EdgeId e, Side target) {
    if (pair_.graph().directed()) {
      return chain_fix_directed(pair_, e, target, trail_);
    }
    if (ctx_.params.chain_fixing) {
      return chain_fix_undirected(pair_, e, target, trail_);
    }
    return move_and_fix(pair_, e, target, trail_);
  }

  // Unfixed edges at broken vertex v that move it towards Z-degree 2, and
  // the side they move to.
  std::pair<std::vector<EdgeId>, Side> repair_options(Vertex v) const {
    const Side from = pair_.z_degree(v) < 2 ? Side::W : Side::Z;
    std::vector<EdgeId> options;
    for (EdgeId f : pair_.graph().incident(v)) {
      if (!pair_.fixed(f) && pair_.side(f) == from) options.push_back(f);
    }
    return {std::move(options), opposite(from)};
  }

  // Accepts the current state if it has no broken vertices and strictly
  // fewer components, and is not the given decomposition.
  bool try_accept() {
    if (!pair_.broken().empty()) return false;
    ComponentReport report = components(pair_);
    const int total = report.total();
    if (total >= objective_) return false;
    if (total == 2 && is_given_decomposition(pair_)) return false;
    objective_ = total;
    trail_.clear();
    pair_.unfix_all();
    fix_parallel_copies();
    if (ctx_.trace) {
      ctx_.trace->accepted.push_back(total);
      if (!is_two_factor_pair(pair_)) ctx_.trace->all_accepted_valid = false;
    }
    if (total > 2 && ctx_.sink) ctx_.sink(report);
    return true;
  }

  TwoFactorPair& pair() { return pair_; }
  FixTrail& trail() { return trail_; }
  SearchContext& ctx() { return ctx_; }

 private:
  void fix_parallel_copies() {
    for (const Edge& e : pair_.graph().edges()) {
      if (e.partner && pair_.side(e.id) != pair_.side(*e.partner)) {
        pair_.set_fixed(e.id, true);
      }
    }
  }

  TwoFactorPair& pair_;
  SearchContext& ctx_;
  FixTrail trail_;
  int objective_ = 0;
};

// Random repair of broken vertices until none remain. Returns false when a
// vertex cannot be repaired or a fix conflicts. `random_choices` is set when
// any random decision was taken.
bool repair_randomly(Search& search, bool& random_choices) {
  TwoFactorPair& pair = search.pair();
  Rng& rng = search.ctx().rng;
  while (!pair.broken().empty()) {
    const auto members = pair.broken().members();
    const Vertex v = members[rng.below(members.size())];
    auto [options, target] = search.repair_options(v);
    if (options.empty()) return false;
    random_choices = true;
    const EdgeId e = options[rng.below(options.size())];
    if (search.fix(e, target) == FixStatus::Conflict) return false;
  }
  return true;
}

bool first_neighbourhood_sweep(Search& search) {
  TwoFactorPair& pair = search.pair();
  FixTrail& trail = search.trail();
  const int attempts = search.ctx().params.attempt_limit;
  for (EdgeId e : search.shuffled_start_edges()) {
    if (search.out_of_time()) return false;
    const std::size_t before_move = trail.mark();
    if (search.fix(e, Side::W) == FixStatus::Ok) {
      const std::size_t after_move = trail.mark();
      for (int attempt = 0; attempt < attempts; ++attempt) {
        bool random_choices = false;
        if (repair_randomly(search, random_choices) && search.try_accept()) {
          return true;
        }
        trail.rollback(pair, after_move);
        if (!random_choices) break;  // further attempts would replay this one
      }
    }
    trail.rollback(pair, before_move);
  }
  return false;
}

class BoundedTree {
 public:
  explicit BoundedTree(Search& search) : search_(search) {}

  bool explore(int depth) {
    TwoFactorPair& pair = search_.pair();
    if (pair.broken().empty()) {
      ++leaves_;
      return search_.try_accept();
    }
    if (depth > search_.ctx().params.depth_limit) {
      ++leaves_;
      return false;
    }
    const auto members = pair.broken().members();
    const Vertex v = members[search_.ctx().rng.below(members.size())];
    auto [options, target] = search_.repair_options(v);
    search_.ctx().rng.shuffle(std::span<EdgeId>(options));
    if (options.empty()) ++leaves_;
    for (EdgeId e : options) {
      const std::size_t mark = search_.trail().mark();
      if (search_.fix(e, target) == FixStatus::Ok && explore(depth + 1)) {
        return true;
      }
      search_.trail().rollback(pair, mark);
    }
    return false;
  }

  std::uint64_t leaves() const { return leaves_; }
  void reset() { leaves_ = 0; }

 private:
  Search& search_;
  std::uint64_t leaves_ = 0;
};

bool second_neighbourhood_sweep(Search& search) {
  TwoFactorPair& pair = search.pair();
  FixTrail& trail = search.trail();
  HeuristicTrace* trace = search.ctx().trace;
  BoundedTree tree(search);
  for (EdgeId e : search.shuffled_start_edges()) {
    if (search.out_of_time()) return false;
    const std::size_t before_move = trail.mark();
    tree.reset();
    const bool improved =
        search.fix(e, Side::W) == FixStatus::Ok && tree.explore(1);
    if (trace) trace->max_tree_leaves = std::max(trace->max_tree_leaves, tree.leaves());
    if (improved) return true;
    trail.rollback(pair, before_move);
  }
  return false;
}

void require_directed(const TwoFactorPair& pair, bool directed) {
  if (pair.graph().directed() != directed) {
    throw InputError(directed ? "directed local search needs a directed pair"
                              : "this neighbourhood needs an undirected pair");
  }
}

}  // namespace

int local_search_directed(TwoFactorPair& pair, SearchContext& ctx) {
  require_directed(pair, true);
  Search search(pair, ctx);
  FixTrail& trail = search.trail();
  int accepted = 0;
  bool improved = true;
  while (improved && !search.solved() && !search.out_of_time()) {
    improved = false;
    for (EdgeId e : search.shuffled_start_edges()) {
      const std::size_t mark = trail.mark();
      if (search.fix(e, Side::W) == FixStatus::Ok && search.try_accept()) {
        improved = true;
        ++accepted;
        break;
      }
      trail.rollback(pair, mark);
    }
  }
  return accepted;
}

int ls_first_neighbourhood(TwoFactorPair& pair, SearchContext& ctx) {
  require_directed(pair, false);
  Search search(pair, ctx);
  int accepted = 0;
  while (!search.solved() && first_neighbourhood_sweep(search)) ++accepted;
  return accepted;
}

bool ls_second_neighbourhood(TwoFactorPair& pair, SearchContext& ctx) {
  require_directed(pair, false);
  Search search(pair, ctx);
  return !search.solved() && second_neighbourhood_sweep(search);
}

int vnd_undirected(TwoFactorPair& pair, SearchContext& ctx) {
  require_directed(pair, false);
  Search search(pair, ctx);
  int accepted = 0;
  while (!search.solved() && !search.out_of_time()) {
    while (!search.solved() && first_neighbourhood_sweep(search)) ++accepted;
    if (search.solved() || !second_neighbourhood_sweep(search)) break;
    ++accepted;
  }
  return accepted;
}

}  // namespace hamdec
