#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hamdec {

// Vertices are 1-based labels throughout the library; per-vertex arrays are
// sized n + 1 and slot 0 is unused.
using Vertex = std::int32_t;
using EdgeId = std::int32_t;

// A Hamiltonian cycle stored as a vertex order starting at vertex 1. The
// closing edge from the last vertex back to vertex 1 is implied.
class HamCycle {
 public:
  // Throws InputError unless order is a permutation of 1..n (n >= 3) with
  // order[0] == 1.
  HamCycle(std::vector<Vertex> order, bool directed);

  // Rotates an arbitrary vertex order so that it starts at vertex 1. For an
  // undirected cycle the orientation is normalised so that order[1] <
  // order[n-1].
  static HamCycle canonical(std::vector<Vertex> order, bool directed);

  int n() const { return static_cast<int>(order_.size()); }
  bool directed() const { return directed_; }
  std::span<const Vertex> order() const { return order_; }

  Vertex successor(Vertex v) const { return succ_[v]; }
  Vertex predecessor(Vertex v) const { return pred_[v]; }

  // Edges in traversal order: (order[k], order[k+1]).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Edge multiset key: sorted (tail, head) pairs; for undirected cycles each
  // pair is stored as (min, max). Two cycles are the same iff keys match.
  std::vector<std::pair<Vertex, Vertex>> edge_key() const;

  friend bool operator==(const HamCycle& a, const HamCycle& b) {
    return a.directed_ == b.directed_ && a.edge_key() == b.edge_key();
  }

 private:
  std::vector<Vertex> order_;
  std::vector<Vertex> succ_;
  std::vector<Vertex> pred_;
  bool directed_;
};

enum class Origin : std::uint8_t { FromX, FromY };

struct Edge {
  EdgeId id = 0;
  Vertex tail = 0;
  Vertex head = 0;
  std::optional<EdgeId> partner;  // parallel copy, if any
  Origin origin = Origin::FromX;

  Vertex other(Vertex v) const { return v == tail ? head : tail; }
};

// The multigraph x ∪ y. Edge ids 0..n-1 are the edges of x in traversal order,
// n..2n-1 those of y. Parallel copies keep distinct ids and are linked through
// Edge::partner.
class UnionMultigraph {
 public:
  int n() const { return n_; }
  bool directed() const { return directed_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Undirected: the four edges incident to v. Directed: out-arcs followed by
  // in-arcs.
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  std::span<const EdgeId> out_arcs(Vertex v) const {
    return std::span<const EdgeId>(incident_[v]).first(2);
  }
  std::span<const EdgeId> in_arcs(Vertex v) const {
    return std::span<const EdgeId>(incident_[v]).subspan(2, 2);
  }

  int parallel_pairs() const { return parallel_pairs_; }
  // |x ∩ y| counted as multigraph edges: both copies of every parallel pair.
  int multi_edges() const { return 2 * parallel_pairs_; }

  // Edges that belong to one input cycle only (E(x)\E(y), E(y)\E(x)).
  std::vector<EdgeId> unique_edges(Origin origin) const;

 private:
  friend UnionMultigraph build_union(const HamCycle& x, const HamCycle& y);

  int n_ = 0;
  bool directed_ = false;
  int parallel_pairs_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Throws InputError when x and y disagree on n or directedness.
UnionMultigraph build_union(const HamCycle& x, const HamCycle& y);

// Peak vertices of a cycle: i with predecessor(i) < i and successor(i) < i.
// Returned in increasing order.
std::vector<Vertex> peaks(const HamCycle& c);

}  // namespace hamdec
