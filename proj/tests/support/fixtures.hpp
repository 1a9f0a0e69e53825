#pragma once

#include <vector>

#include "hamdec/instance_gen.hpp"
#include "hamdec/multigraph.hpp"

namespace hamdec::testing {

inline Instance make_instance(std::vector<Vertex> x, std::vector<Vertex> y,
                              bool directed) {
  HamCycle cx(std::move(x), directed);
  HamCycle cy(std::move(y), directed);
  UnionMultigraph g = build_union(cx, cy);
  return Instance{std::move(cx), std::move(cy), std::move(g)};
}

// Two cycles whose union has the second decomposition z, w (and two more).
inline Instance six_vertex_example() {
  return make_instance({1, 2, 3, 4, 5, 6}, {1, 4, 6, 2, 3, 5}, false);
}
inline const std::vector<Vertex> kExampleZ{1, 4, 5, 3, 2, 6};
inline const std::vector<Vertex> kExampleW{1, 2, 3, 4, 6, 5};

// A union with parallel pairs {1,2} and {4,5}; Z = triangles
// {1,2,6}, {3,4,5} and W = triangles {1,2,3}, {4,5,6}.
inline Instance triangle_split_example() {
  return make_instance({1, 2, 3, 4, 5, 6}, {1, 2, 6, 4, 5, 3}, false);
}

// Pyramidal tour with the single peak 8; ascending run {2, 4, 5, 7}.
inline const std::vector<Vertex> kPyramidalTour{1, 2, 4, 5, 7, 8, 6, 3};

// Z = 4-cycles 1-5-8-4 and 2-3-7-6, W = 1-2-7-8 and 3-6-5-4.
inline Instance four_cycle_split_example() {
  return make_instance({1, 5, 8, 4, 3, 7, 6, 2}, {1, 4, 5, 6, 3, 2, 7, 8},
                       false);
}

}  // namespace hamdec::testing
