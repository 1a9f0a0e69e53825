#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hamdec/multigraph.hpp"

namespace hamdec {

enum class Side : std::uint8_t { Z = 0, W = 1 };

constexpr Side opposite(Side s) { return s == Side::Z ? Side::W : Side::Z; }

// Set of vertex labels with O(1) insert, erase and indexed access (for
// uniform random extraction).
class VertexSet {
 public:
  explicit VertexSet(int n = 0) : position_(n + 1, kAbsent) {}

  bool contains(Vertex v) const { return position_[v] != kAbsent; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  std::span<const Vertex> members() const { return members_; }

  void insert(Vertex v);
  void erase(Vertex v);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static constexpr std::int32_t kAbsent = -1;
  std::vector<std::int32_t> position_;
  std::vector<Vertex> members_;
};

// Assignment of every edge of a union multigraph to factor Z or W, with
// per-edge fixed flags. Degree counters and the broken-vertex set are kept in
// sync with every side change: a vertex is broken when its Z-degree differs
// from 2 (undirected) or its Z in/out-degree differs from 1 (directed). The
// W-side counts are the complements, so the same test covers both factors.
class TwoFactorPair {
 public:
  TwoFactorPair(const UnionMultigraph& graph, std::vector<Side> sides);

  // x in Z, y in W.
  static TwoFactorPair from_origin(const UnionMultigraph& graph);

  // Puts into Z the edges with the given endpoints (directed: (tail, head));
  // every other edge goes to W. A listed pair that occurs twice in the
  // multigraph consumes one copy per listing. Throws InputError on endpoints
  // that are not an available edge.
  static TwoFactorPair from_z_edges(
      const UnionMultigraph& graph,
      std::span<const std::pair<Vertex, Vertex>> z_edges);

  const UnionMultigraph& graph() const { return *graph_; }

  Side side(EdgeId e) const { return static_cast<Side>(side_[e]); }
  bool fixed(EdgeId e) const { return fixed_[e] != 0; }
  std::span<const std::uint8_t> sides() const { return side_; }

  void set_side(EdgeId e, Side s);
  void set_fixed(EdgeId e, bool value) { fixed_[e] = value ? 1 : 0; }
  void unfix_all() { std::fill(fixed_.begin(), fixed_.end(), 0); }

  // Undirected only: number of Z edges at v.
  int z_degree(Vertex v) const { return z_out_[v]; }
  // Directed only.
  int z_out_degree(Vertex v) const { return z_out_[v]; }
  int z_in_degree(Vertex v) const { return z_in_[v]; }

  const VertexSet& broken() const { return broken_; }

  std::vector<EdgeId> edges_on(Side s) const;

  // Same sides and fixed flags.
  bool same_state(const TwoFactorPair& other) const {
    return side_ == other.side_ && fixed_ == other.fixed_;
  }

 private:
  void refresh_broken(Vertex v);

  const UnionMultigraph* graph_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint8_t> fixed_;
  std::vector<int> z_out_;  // undirected: Z-degree
  std::vector<int> z_in_;
  VertexSet broken_;
};

struct ComponentReport {
  std::vector<std::vector<Vertex>> z_subtours;
  std::vector<std::vector<Vertex>> w_subtours;

  int total() const {
    return static_cast<int>(z_subtours.size() + w_subtours.size());
  }
};

// Connected components of each factor. Each subtour is sorted and the lists
// are ordered by smallest vertex. Throws ContractError if the pair still has
// broken vertices.
ComponentReport components(const TwoFactorPair& pair);

// Full recount of the factor-degree contract (does not trust the counters).
bool is_two_factor_pair(const TwoFactorPair& pair);

// True iff Z equals x and W equals y, or Z equals y and W equals x, as edge
// multisets.
bool is_given_decomposition(const TwoFactorPair& pair);

// True iff both factors are Hamiltonian cycles and {Z, W} != {x, y}.
bool is_second_decomposition(const TwoFactorPair& pair, const HamCycle& x,
                             const HamCycle& y);

// The factor as a canonical cycle. Throws ContractError unless the factor is
// a single Hamiltonian cycle.
HamCycle factor_cycle(const TwoFactorPair& pair, Side s);

}  // namespace hamdec
