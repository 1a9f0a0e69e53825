#pragma once

#include <optional>
#include <vector>

#include "hamdec/multigraph.hpp"

namespace hamdec {

inline constexpr int kOracleMaxN = 14;

// An unordered pair of edge-disjoint Hamiltonian cycles covering the
// multigraph. Both cycles are canonical and first.order() <= second.order()
// lexicographically, so equal decompositions compare equal.
struct Decomposition {
  HamCycle first;
  HamCycle second;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition make_decomposition(HamCycle a, HamCycle b);

// Every Hamiltonian decomposition of g, by backtracking over per-edge factor
// assignments with degree pruning. Results are sorted and duplicate-free.
// Throws InputError when n > kOracleMaxN.
std::vector<Decomposition> enumerate_decompositions(const UnionMultigraph& g);

struct OracleReport {
  int decompositions = 0;
  std::optional<Decomposition> second;  // one decomposition other than {x, y}
  bool second_exists() const { return second.has_value(); }
};

OracleReport has_second_decomposition(const UnionMultigraph& g,
                                      const HamCycle& x, const HamCycle& y);

}  // namespace hamdec
