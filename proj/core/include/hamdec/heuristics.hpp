#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "hamdec/rng.hpp"
#include "hamdec/two_factor_pair.hpp"

namespace hamdec {

struct HeuristicParams {
  int attempt_limit = 10;  // random repair rollouts per start edge
  int depth_limit = 5;     // bounded search tree depth
  // false: moves touch a single edge and broken vertices are repaired one
  // edge at a time, without recursive fixing.
  bool chain_fixing = true;
};

// Throws InputError when attempt_limit < 1 or depth_limit < 0.
void validate(const HeuristicParams& params);

// Undo log of (edge, prior side, prior fixed flag).
class FixTrail {
 public:
  std::size_t mark() const { return entries_.size(); }
  void record(const TwoFactorPair& pair, EdgeId e) {
    entries_.push_back(Entry{e, pair.side(e), pair.fixed(e)});
  }
  // Restores the pair to its state when `mark` was taken.
  void rollback(TwoFactorPair& pair, std::size_t mark);
  void clear() { entries_.clear(); }

 private:
  struct Entry {
    EdgeId edge;
    Side side;
    bool fixed;
  };
  std::vector<Entry> entries_;
};

enum class FixStatus { Ok, Conflict };

// Fix arc e on `target`; the other arc leaving its tail and the other arc
// entering its head are fixed on the opposite side, recursively. Conflict when
// a required arc is already fixed on the wrong side; the caller rolls back.
FixStatus chain_fix_directed(TwoFactorPair& pair, EdgeId e, Side target,
                             FixTrail& trail);

// Move and fix edge e on `target`. Whenever a vertex holds two fixed edges
// on one side, its remaining unfixed edges are fixed on the other side,
// recursively. Conflict when a vertex would hold three fixed edges on one
// side. The pair's broken set tracks every vertex with Z-degree != 2.
FixStatus chain_fix_undirected(TwoFactorPair& pair, EdgeId e, Side target,
                               FixTrail& trail);

// Move and fix a single edge with no propagation.
FixStatus move_and_fix(TwoFactorPair& pair, EdgeId e, Side target,
                       FixTrail& trail);

// Receives the components of every accepted intermediate state that is not
// yet a decomposition.
using SubtourSink = std::function<void(const ComponentReport&)>;

struct HeuristicTrace {
  int initial_objective = 0;
  std::vector<int> accepted;       // objective after each accepted move
  bool all_accepted_valid = true;  // every accepted state was two 2-factors
  std::uint64_t max_tree_leaves = 0;  // largest bounded-search tree explored

  bool strictly_decreasing() const;
};

struct SearchContext {
  Rng& rng;
  HeuristicParams params;
  SubtourSink sink;                  // may be empty
  HeuristicTrace* trace = nullptr;   // may be null
  std::chrono::steady_clock::time_point deadline =
      std::chrono::steady_clock::time_point::max();
};

// Each search takes a valid pair (no broken vertices) and leaves it at the
// best state found. Moves are accepted on a strict decrease of the total
// component count; a state equal to the given decomposition {x, y} is never
// accepted. Parallel copies are fixed one per factor beforehand.

// Directed local search; returns the number of accepted moves.
int local_search_directed(TwoFactorPair& pair, SearchContext& ctx);

// Descends with respect to the first (random repair) neighbourhood until a
// full sweep finds no improvement; returns the number of accepted moves.
int ls_first_neighbourhood(TwoFactorPair& pair, SearchContext& ctx);

// One sweep of the bounded search tree neighbourhood; returns true on the
// first improvement.
bool ls_second_neighbourhood(TwoFactorPair& pair, SearchContext& ctx);

// Alternates the two neighbourhoods until a joint local minimum or a
// decomposition; returns the number of accepted moves.
int vnd_undirected(TwoFactorPair& pair, SearchContext& ctx);

}  // namespace hamdec
