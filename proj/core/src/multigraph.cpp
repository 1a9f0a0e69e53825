#include "hamdec/multigraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hamdec/errors.hpp"

namespace hamdec {

HamCycle::HamCycle(std::vector<Vertex> order, bool directed)
    : order_(std::move(order)), directed_(directed) {
  const int n = static_cast<int>(order_.size());
  if (n < 3) {
    throw InputError("a Hamiltonian cycle needs at least 3 vertices, got " +
                     std::to_string(n));
  }
  if (order_.front() != 1) {
    throw InputError("cycle order must start at vertex 1");
  }
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : order_) {
    if (v < 1 || v > n || seen[v]) {
      throw InputError("cycle order is not a permutation of 1.." +
                       std::to_string(n));
    }
    seen[v] = true;
  }
  succ_.assign(n + 1, 0);
  pred_.assign(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    const Vertex a = order_[k];
    const Vertex b = order_[(k + 1) % n];
    succ_[a] = b;
    pred_[b] = a;
  }
}

HamCycle HamCycle::canonical(std::vector<Vertex> order, bool directed) {
  const auto it = std::find(order.begin(), order.end(), Vertex{1});
  if (it == order.end()) {
    throw InputError("cycle order does not contain vertex 1");
  }
  std::rotate(order.begin(), it, order.end());
  if (!directed && order.size() > 2 && order[1] > order.back()) {
    std::reverse(order.begin() + 1, order.end());
  }
  return HamCycle(std::move(order), directed);
}

std::vector<std::pair<Vertex, Vertex>> HamCycle::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(order_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) {
    result.emplace_back(order_[k], order_[(k + 1) % order_.size()]);
  }
  return result;
}

std::vector<std::pair<Vertex, Vertex>> HamCycle::edge_key() const {
  auto key = edges();
  if (!directed_) {
    for (auto& [a, b] : key) {
      if (a > b) std::swap(a, b);
    }
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<EdgeId> UnionMultigraph::unique_edges(Origin origin) const {
  std::vector<EdgeId> result;
  for (const Edge& e : edges_) {
    if (e.origin == origin && !e.partner) result.push_back(e.id);
  }
  return result;
}

UnionMultigraph build_union(const HamCycle& x, const HamCycle& y) {
  if (x.n() != y.n()) {
    throw InputError("cycles have different vertex counts");
  }
  if (x.directed() != y.directed()) {
    throw InputError("cycles disagree on directedness");
  }
  UnionMultigraph g;
  g.n_ = x.n();
  g.directed_ = x.directed();
  g.edges_.reserve(2 * g.n_);

  auto append = [&g](const HamCycle& c, Origin origin) {
    for (auto [a, b] : c.edges()) {
      Edge e;
      e.id = static_cast<EdgeId>(g.edges_.size());
      e.tail = a;
      e.head = b;
      e.origin = origin;
      g.edges_.push_back(e);
    }
  };
  append(x, Origin::FromX);
  append(y, Origin::FromY);

  auto endpoint_key = [&g](const Edge& e) {
    if (g.directed_ || e.tail < e.head) return std::pair{e.tail, e.head};
    return std::pair{e.head, e.tail};
  };
  std::map<std::pair<Vertex, Vertex>, EdgeId> x_edges;
  for (EdgeId id = 0; id < g.n_; ++id) {
    x_edges.emplace(endpoint_key(g.edges_[id]), id);
  }
  for (EdgeId id = g.n_; id < 2 * g.n_; ++id) {
    const auto it = x_edges.find(endpoint_key(g.edges_[id]));
    if (it != x_edges.end()) {
      g.edges_[id].partner = it->second;
      g.edges_[it->second].partner = id;
      ++g.parallel_pairs_;
    }
  }

  g.incident_.assign(g.n_ + 1, {});
  if (g.directed_) {
    std::vector<std::vector<EdgeId>> in(g.n_ + 1);
    for (const Edge& e : g.edges_) {
      g.incident_[e.tail].push_back(e.id);
      in[e.head].push_back(e.id);
    }
    for (Vertex v = 1; v <= g.n_; ++v) {
      g.incident_[v].insert(g.incident_[v].end(), in[v].begin(), in[v].end());
    }
  } else {
    for (const Edge& e : g.edges_) {
      g.incident_[e.tail].push_back(e.id);
      g.incident_[e.head].push_back(e.id);
    }
  }
  return g;
}

std::vector<Vertex> peaks(const HamCycle& c) {
  std::vector<Vertex> result;
  for (Vertex i = 1; i <= c.n(); ++i) {
    if (c.predecessor(i) < i && c.successor(i) < i) result.push_back(i);
  }
  return result;
}

}  // namespace hamdec
