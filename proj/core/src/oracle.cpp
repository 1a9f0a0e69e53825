#include "hamdec/oracle.hpp"

#include <algorithm>
#include <string>

#include "hamdec/errors.hpp"

namespace hamdec {

Decomposition make_decomposition(HamCycle a, HamCycle b) {
  if (!std::ranges::lexicographical_compare(b.order(), a.order())) {
    return Decomposition{std::move(a), std::move(b)};
  }
  return Decomposition{std::move(b), std::move(a)};
}

namespace {

bool order_less(const Decomposition& a, const Decomposition& b) {
  if (!std::ranges::equal(a.first.order(), b.first.order())) {
    return std::ranges::lexicographical_compare(a.first.order(),
                                                b.first.order());
  }
  return std::ranges::lexicographical_compare(a.second.order(),
                                              b.second.order());
}

class Enumerator {
 public:
  explicit Enumerator(const UnionMultigraph& g)
      : g_(g),
        in_first_(g.edge_count(), false),
        out_count_(2, std::vector<int>(g.n() + 1, 0)),
        in_count_(2, std::vector<int>(g.n() + 1, 0)) {}

  std::vector<Decomposition> run() {
    // Edge 0 goes to the first factor; the swapped assignment is the same
    // unordered pair.
    assign(0, 0);
    search(1);
    std::ranges::sort(found_, order_less);
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  // Undirected graphs count degree in out_count_ only.
  bool fits(EdgeId e, int factor) const {
    const Edge& edge = g_.edge(e);
    if (!g_.directed()) {
      return out_count_[factor][edge.tail] < 2 &&
             out_count_[factor][edge.head] < 2;
    }
    return out_count_[factor][edge.tail] < 1 && in_count_[factor][edge.head] < 1;
  }

  void assign(EdgeId e, int factor) {
    const Edge& edge = g_.edge(e);
    in_first_[e] = factor == 0;
    ++out_count_[factor][edge.tail];
    if (g_.directed()) {
      ++in_count_[factor][edge.head];
    } else {
      ++out_count_[factor][edge.head];
    }
  }

  void unassign(EdgeId e, int factor) {
    const Edge& edge = g_.edge(e);
    --out_count_[factor][edge.tail];
    if (g_.directed()) {
      --in_count_[factor][edge.head];
    } else {
      --out_count_[factor][edge.head];
    }
  }

  void search(EdgeId e) {
    if (e == g_.edge_count()) {
      record();
      return;
    }
    for (int factor : {0, 1}) {
      if (!fits(e, factor)) continue;
      assign(e, factor);
      search(e + 1);
      unassign(e, factor);
    }
  }

  // Walks the factor from vertex 1; returns the vertex order if it is a
  // single cycle through all n vertices.
  std::optional<std::vector<Vertex>> hamiltonian_order(bool first) const {
    const int n = g_.n();
    std::vector<std::vector<EdgeId>> at(n + 1);
    for (const Edge& edge : g_.edges()) {
      if (in_first_[edge.id] != first) continue;
      at[edge.tail].push_back(edge.id);
      if (!g_.directed()) at[edge.head].push_back(edge.id);
    }
    std::vector<Vertex> order{1};
    Vertex current = 1;
    EdgeId came_by = -1;
    for (int step = 0; step < n; ++step) {
      EdgeId next = -1;
      for (EdgeId candidate : at[current]) {
        if (candidate != came_by) {
          next = candidate;
          break;
        }
      }
      if (next < 0) return std::nullopt;
      current = g_.edge(next).other(current);
      came_by = next;
      if (current == 1) break;
      order.push_back(current);
    }
    if (current != 1 || static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
  }

  void record() {
    auto a = hamiltonian_order(true);
    if (!a) return;
    auto b = hamiltonian_order(false);
    if (!b) return;
    found_.push_back(make_decomposition(
        HamCycle::canonical(std::move(*a), g_.directed()),
        HamCycle::canonical(std::move(*b), g_.directed())));
  }

  const UnionMultigraph& g_;
  std::vector<bool> in_first_;
  std::vector<std::vector<int>> out_count_;
  std::vector<std::vector<int>> in_count_;
  std::vector<Decomposition> found_;
};

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const UnionMultigraph& g) {
  if (g.n() > kOracleMaxN) {
    throw InputError("oracle enumeration is limited to n <= " +
                     std::to_string(kOracleMaxN) + ", got " +
                     std::to_string(g.n()));
  }
  return Enumerator(g).run();
}

OracleReport has_second_decomposition(const UnionMultigraph& g,
                                      const HamCycle& x, const HamCycle& y) {
  const Decomposition given = make_decomposition(
      HamCycle::canonical({x.order().begin(), x.order().end()}, x.directed()),
      HamCycle::canonical({y.order().begin(), y.order().end()}, y.directed()));
  OracleReport report;
  for (Decomposition& d : enumerate_decompositions(g)) {
    ++report.decompositions;
    if (!report.second && !(d == given)) report.second = std::move(d);
  }
  return report;
}

}  // namespace hamdec
