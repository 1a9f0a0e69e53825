#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hamdec/multigraph.hpp"
#include "hamdec/rng.hpp"

namespace hamdec {

enum class InstanceKind { RandomPermutation, Pyramidal, FourPeak };

// "permutation", "pyramidal", "four-peak".
std::string_view to_string(InstanceKind kind);
std::optional<InstanceKind> parse_instance_kind(std::string_view text);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::RandomPermutation;
  int n = 0;
  bool directed = false;
  std::uint64_t seed = 0;
};

struct Instance {
  HamCycle x;
  HamCycle y;
  UnionMultigraph graph;
};

// Vertex 1 first, then a Fisher-Yates shuffle of 2..n.
HamCycle random_permutation_cycle(int n, Rng& rng, bool directed = false);

// Single peak n: every vertex in 2..n-1 joins the ascending or descending run
// with probability 1/2.
HamCycle pyramidal_tour(int n, Rng& rng, bool directed = false);

// Builds a pyramidal tour from an explicit run assignment; ascending[v] tells
// whether vertex v (2 <= v <= n-1) is on the ascending run. Index 0, 1 and n
// are ignored.
HamCycle pyramidal_tour_from_runs(int n, const std::vector<bool>& ascending,
                                  bool directed = false);

// Exactly four peaks, n >= 8: vertices fall uniformly into four groups, each
// group is laid out like a pyramidal tour and the segments are concatenated;
// redrawn until the cycle has exactly four peaks.
HamCycle four_peak_cycle(int n, Rng& rng, bool directed = false);

// Two independent draws from the spec's family (one derived RNG stream per
// cycle) and their union.
Instance generate_instance(const InstanceSpec& spec);

}  // namespace hamdec
