#include "hamdec/two_factor_pair.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hamdec/errors.hpp"

namespace hamdec {

void VertexSet::insert(Vertex v) {
  if (contains(v)) return;
  position_[v] = static_cast<std::int32_t>(members_.size());
  members_.push_back(v);
}

void VertexSet::erase(Vertex v) {
  if (!contains(v)) return;
  const auto pos = static_cast<std::size_t>(position_[v]);
  const Vertex last = members_.back();
  members_[pos] = last;
  position_[last] = static_cast<std::int32_t>(pos);
  members_.pop_back();
  position_[v] = kAbsent;
}

TwoFactorPair::TwoFactorPair(const UnionMultigraph& graph,
                             std::vector<Side> sides)
    : graph_(&graph),
      side_(sides.size()),
      fixed_(sides.size(), 0),
      z_out_(graph.n() + 1, 0),
      z_in_(graph.n() + 1, 0),
      broken_(graph.n()) {
  if (static_cast<int>(sides.size()) != graph.edge_count()) {
    throw InputError("side assignment size does not match the edge count");
  }
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    side_[e] = static_cast<std::uint8_t>(sides[e]);
    if (sides[e] != Side::Z) continue;
    const Edge& edge = graph.edge(e);
    ++z_out_[edge.tail];
    if (graph.directed()) {
      ++z_in_[edge.head];
    } else {
      ++z_out_[edge.head];
    }
  }
  for (Vertex v = 1; v <= graph.n(); ++v) refresh_broken(v);
}

TwoFactorPair TwoFactorPair::from_origin(const UnionMultigraph& graph) {
  std::vector<Side> sides(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    sides[e.id] = e.origin == Origin::FromX ? Side::Z : Side::W;
  }
  return TwoFactorPair(graph, std::move(sides));
}

TwoFactorPair TwoFactorPair::from_z_edges(
    const UnionMultigraph& graph,
    std::span<const std::pair<Vertex, Vertex>> z_edges) {
  std::vector<Side> sides(graph.edge_count(), Side::W);
  for (auto [a, b] : z_edges) {
    bool placed = false;
    for (const Edge& e : graph.edges()) {
      if (sides[e.id] == Side::Z) continue;
      const bool match =
          (e.tail == a && e.head == b) ||
          (!graph.directed() && e.tail == b && e.head == a);
      if (match) {
        sides[e.id] = Side::Z;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw InputError("no available edge (" + std::to_string(a) + "," +
                       std::to_string(b) + ") in the union multigraph");
    }
  }
  return TwoFactorPair(graph, std::move(sides));
}

void TwoFactorPair::set_side(EdgeId e, Side s) {
  if (side(e) == s) return;
  const Edge& edge = graph_->edge(e);
  const int delta = s == Side::Z ? 1 : -1;
  side_[e] = static_cast<std::uint8_t>(s);
  z_out_[edge.tail] += delta;
  if (graph_->directed()) {
    z_in_[edge.head] += delta;
  } else {
    z_out_[edge.head] += delta;
  }
  refresh_broken(edge.tail);
  refresh_broken(edge.head);
}

void TwoFactorPair::refresh_broken(Vertex v) {
  const bool ok = graph_->directed() ? (z_out_[v] == 1 && z_in_[v] == 1)
                                     : z_out_[v] == 2;
  if (ok) {
    broken_.erase(v);
  } else {
    broken_.insert(v);
  }
}

std::vector<EdgeId> TwoFactorPair::edges_on(Side s) const {
  std::vector<EdgeId> result;
  for (EdgeId e = 0; e < static_cast<EdgeId>(side_.size()); ++e) {
    if (side(e) == s) result.push_back(e);
  }
  return result;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

std::vector<std::vector<Vertex>> factor_components(const TwoFactorPair& pair,
                                                   Side s) {
  const UnionMultigraph& g = pair.graph();
  DisjointSets sets(g.n());
  for (const Edge& e : g.edges()) {
    if (pair.side(e.id) == s) sets.unite(e.tail, e.head);
  }
  std::vector<int> slot(g.n() + 1, -1);
  std::vector<std::vector<Vertex>> result;
  for (Vertex v = 1; v <= g.n(); ++v) {
    const int root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[slot[root]].push_back(v);
  }
  return result;
}

std::vector<std::pair<Vertex, Vertex>> edge_key(
    const UnionMultigraph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::pair<Vertex, Vertex>> key;
  key.reserve(ids.size());
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    if (!g.directed() && e.tail > e.head) {
      key.emplace_back(e.head, e.tail);
    } else {
      key.emplace_back(e.tail, e.head);
    }
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<EdgeId> origin_ids(const UnionMultigraph& g, Origin origin) {
  std::vector<EdgeId> ids;
  for (const Edge& e : g.edges()) {
    if (e.origin == origin) ids.push_back(e.id);
  }
  return ids;
}

}  // namespace

ComponentReport components(const TwoFactorPair& pair) {
  if (!pair.broken().empty()) {
    throw ContractError("components() requires a pair without broken vertices");
  }
  return ComponentReport{factor_components(pair, Side::Z),
                         factor_components(pair, Side::W)};
}

bool is_two_factor_pair(const TwoFactorPair& pair) {
  const UnionMultigraph& g = pair.graph();
  std::vector<int> out(g.n() + 1, 0);
  std::vector<int> in(g.n() + 1, 0);
  for (const Edge& e : g.edges()) {
    if (pair.side(e.id) != Side::Z) continue;
    ++out[e.tail];
    ++(g.directed() ? in[e.head] : out[e.head]);
  }
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (g.directed() ? (out[v] != 1 || in[v] != 1) : out[v] != 2) return false;
  }
  return true;
}

bool is_given_decomposition(const TwoFactorPair& pair) {
  const UnionMultigraph& g = pair.graph();
  const auto z = edge_key(g, pair.edges_on(Side::Z));
  return z == edge_key(g, origin_ids(g, Origin::FromX)) ||
         z == edge_key(g, origin_ids(g, Origin::FromY));
}

bool is_second_decomposition(const TwoFactorPair& pair, const HamCycle& x,
                             const HamCycle& y) {
  if (!pair.broken().empty() || !is_two_factor_pair(pair)) return false;
  if (components(pair).total() != 2) return false;
  const UnionMultigraph& g = pair.graph();
  const auto z = edge_key(g, pair.edges_on(Side::Z));
  return z != x.edge_key() && z != y.edge_key();
}

HamCycle factor_cycle(const TwoFactorPair& pair, Side s) {
  if (!is_two_factor_pair(pair)) {
    throw ContractError("factor_cycle() requires two valid 2-factors");
  }
  const UnionMultigraph& g = pair.graph();
  std::vector<Vertex> order;
  order.reserve(g.n());
  std::vector<bool> visited(g.n() + 1, false);
  Vertex current = 1;
  EdgeId via = -1;
  while (!visited[current]) {
    visited[current] = true;
    order.push_back(current);
    EdgeId next = -1;
    for (EdgeId e : g.directed() ? g.out_arcs(current) : g.incident(current)) {
      if (pair.side(e) == s && e != via) {
        next = e;
        break;
      }
    }
    if (next < 0) break;
    via = next;
    current = g.edge(next).other(current);
  }
  if (static_cast<int>(order.size()) != g.n() || current != 1) {
    throw ContractError("factor is not a Hamiltonian cycle");
  }
  return HamCycle::canonical(std::move(order), g.directed());
}

}  // namespace hamdec
