#include <string>
#include <utility>

#include "hamdec/errors.hpp"
#include "hamdec/heuristics.hpp"

namespace hamdec {

void validate(const HeuristicParams& params) {
  if (params.attempt_limit < 1) {
    throw InputError("attempt limit must be at least 1, got " +
                     std::to_string(params.attempt_limit));
  }
  if (params.depth_limit < 0) {
    throw InputError("depth limit must be non-negative, got " +
                     std::to_string(params.depth_limit));
  }
}

void FixTrail::rollback(TwoFactorPair& pair, std::size_t mark) {
  while (entries_.size() > mark) {
    const Entry& e = entries_.back();
    pair.set_side(e.edge, e.side);
    pair.set_fixed(e.edge, e.fixed);
    entries_.pop_back();
  }
}

namespace {

void place(TwoFactorPair& pair, EdgeId e, Side s, FixTrail& trail) {
  trail.record(pair, e);
  pair.set_side(e, s);
  pair.set_fixed(e, true);
}

EdgeId sibling(std::span<const EdgeId> two, EdgeId e) {
  return two[0] == e ? two[1] : two[0];
}

}  // namespace

FixStatus chain_fix_directed(TwoFactorPair& pair, EdgeId e, Side target,
                             FixTrail& trail) {
  const UnionMultigraph& g = pair.graph();
  std::vector<std::pair<EdgeId, Side>> pending{{e, target}};
  while (!pending.empty()) {
    const auto [arc, side] = pending.back();
    pending.pop_back();
    if (pair.fixed(arc)) {
      if (pair.side(arc) != side) return FixStatus::Conflict;
      continue;
    }
    place(pair, arc, side, trail);
    const Edge& edge = g.edge(arc);
    for (EdgeId other : {sibling(g.out_arcs(edge.tail), arc),
                         sibling(g.in_arcs(edge.head), arc)}) {
      if (!pair.fixed(other)) {
        pending.emplace_back(other, opposite(side));
      } else if (pair.side(other) == side) {
        return FixStatus::Conflict;
      }
    }
  }
  return FixStatus::Ok;
}

FixStatus chain_fix_undirected(TwoFactorPair& pair, EdgeId e, Side target,
                               FixTrail& trail) {
  const UnionMultigraph& g = pair.graph();
  std::vector<std::pair<EdgeId, Side>> pending{{e, target}};
  while (!pending.empty()) {
    const auto [edge_id, side] = pending.back();
    pending.pop_back();
    if (pair.fixed(edge_id)) {
      if (pair.side(edge_id) != side) return FixStatus::Conflict;
      continue;
    }
    place(pair, edge_id, side, trail);
    const Edge& edge = g.edge(edge_id);
    for (Vertex v : {edge.tail, edge.head}) {
      int fixed_here = 0;
      for (EdgeId f : g.incident(v)) {
        if (pair.fixed(f) && pair.side(f) == side) ++fixed_here;
      }
      if (fixed_here > 2) return FixStatus::Conflict;
      if (fixed_here < 2) continue;
      for (EdgeId f : g.incident(v)) {
        if (!pair.fixed(f)) pending.emplace_back(f, opposite(side));
      }
    }
  }
  return FixStatus::Ok;
}

FixStatus move_and_fix(TwoFactorPair& pair, EdgeId e, Side target,
                       FixTrail& trail) {
  if (pair.fixed(e)) {
    return pair.side(e) == target ? FixStatus::Ok : FixStatus::Conflict;
  }
  place(pair, e, target, trail);
  return FixStatus::Ok;
}

}  // namespace hamdec
