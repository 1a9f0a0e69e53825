#pragma once

// Slow reference implementations used to cross-check the library. None of
// them shares code with the library beyond the multigraph data model.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "hamdec/ilp.hpp"
#include "hamdec/multigraph.hpp"

namespace hamdec::testing {

// Components of the subgraph formed by the edges with in_factor[e] true, by
// iterative DFS over an adjacency list.
inline int dfs_component_count(const UnionMultigraph& g,
                               const std::vector<bool>& in_factor) {
  std::vector<std::vector<Vertex>> adj(g.n() + 1);
  for (const Edge& e : g.edges()) {
    if (!in_factor[e.id]) continue;
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<bool> seen(g.n() + 1, false);
  int count = 0;
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

// Rotates to start at 1; undirected orders are reversed if needed so that
// order[1] < order.back().
inline std::vector<Vertex> normalise(std::vector<Vertex> order, bool directed) {
  std::rotate(order.begin(), std::find(order.begin(), order.end(), 1),
              order.end());
  if (!directed && order.size() > 2 && order[1] > order.back()) {
    std::reverse(order.begin() + 1, order.end());
  }
  return order;
}

struct CycleWithEdges {
  std::vector<Vertex> order;
  std::vector<EdgeId> edges;  // sorted
};

// Every Hamiltonian cycle of the multigraph as an edge-id set, by walking
// vertex sequences from vertex 1.
inline std::vector<CycleWithEdges> all_hamiltonian_cycles(
    const UnionMultigraph& g) {
  const int n = g.n();
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> out(n + 1);
  for (const Edge& e : g.edges()) {
    out[e.tail].emplace_back(e.head, e.id);
    if (!g.directed()) out[e.head].emplace_back(e.tail, e.id);
  }
  std::vector<CycleWithEdges> found;
  std::set<std::vector<EdgeId>> seen;
  std::vector<bool> visited(n + 1, false);
  std::vector<Vertex> path{1};
  std::vector<EdgeId> used;
  visited[1] = true;
  std::function<void(Vertex)> walk = [&](Vertex v) {
    for (auto [u, id] : out[v]) {
      if (static_cast<int>(path.size()) == n) {
        if (u != 1) continue;
        std::vector<EdgeId> edges = used;
        edges.push_back(id);
        std::sort(edges.begin(), edges.end());
        if (seen.insert(edges).second) {
          found.push_back(CycleWithEdges{path, edges});
        }
        continue;
      }
      if (visited[u]) continue;
      visited[u] = true;
      path.push_back(u);
      used.push_back(id);
      walk(u);
      used.pop_back();
      path.pop_back();
      visited[u] = false;
    }
  };
  walk(1);
  return found;
}

// Hamiltonian decompositions as unordered pairs of normalised vertex orders,
// found by pairing edge-complementary Hamiltonian cycles.
inline std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
decompositions_by_cycle_pairs(const UnionMultigraph& g) {
  const auto cycles = all_hamiltonian_cycles(g);
  std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      std::vector<EdgeId> both;
      std::set_union(cycles[i].edges.begin(), cycles[i].edges.end(),
                     cycles[j].edges.begin(), cycles[j].edges.end(),
                     std::back_inserter(both));
      if (static_cast<int>(both.size()) != g.edge_count()) continue;
      auto a = normalise(cycles[i].order, g.directed());
      auto b = normalise(cycles[j].order, g.directed());
      if (b < a) std::swap(a, b);
      out.emplace(std::move(a), std::move(b));
    }
  }
  return out;
}

// Exhaustive enumeration over every variable's full domain. Calls visit on
// each feasible assignment; stops early when visit returns false.
inline void for_each_feasible(
    const ilp::IlpModel& model,
    const std::function<bool(const std::vector<ilp::Value>&)>& visit) {
  const int count = model.var_count();
  std::vector<ilp::Value> a(count);
  for (int i = 0; i < count; ++i) a[i] = model.var(i).lo;
  while (true) {
    if (model.satisfies(a) && !visit(a)) return;
    int i = 0;
    while (i < count) {
      if (a[i] < model.var(i).hi) {
        ++a[i];
        break;
      }
      a[i] = model.var(i).lo;
      ++i;
    }
    if (i == count) return;
  }
}

inline bool brute_force_feasible(const ilp::IlpModel& model) {
  bool any = false;
  for_each_feasible(model, [&any](const std::vector<ilp::Value>&) {
    any = true;
    return false;
  });
  return any;
}

}  // namespace hamdec::testing
