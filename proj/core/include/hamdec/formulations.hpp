#pragma once

#include <span>
#include <vector>

#include "hamdec/ilp.hpp"
#include "hamdec/multigraph.hpp"
#include "hamdec/two_factor_pair.hpp"

namespace hamdec {

// Edge-variable model: z_e = 1 puts edge e into factor Z, 0 into W.
struct DfjMapping {
  std::vector<ilp::VarId> z;      // indexed by edge id
  std::vector<EdgeId> unique_x;   // E(x) \ E(y)
  std::vector<EdgeId> unique_y;   // E(y) \ E(x)
};

// Order-variable models. Directed: one z variable per arc. Undirected: every
// edge (tail, head) owns four binaries, one per factor and traversal
// direction; "fwd" means tail -> head.
struct MtzMapping {
  struct EdgeVars {
    ilp::VarId z_fwd = -1;
    ilp::VarId z_rev = -1;
    ilp::VarId w_fwd = -1;
    ilp::VarId w_rev = -1;
  };
  bool directed = false;
  std::vector<ilp::VarId> z;         // directed only, indexed by edge id
  std::vector<EdgeVars> quad;        // undirected only, indexed by edge id
  std::vector<ilp::VarId> alpha;     // indexed by vertex, -1 for vertex 1
  std::vector<ilp::VarId> beta;
};

struct DfjModel {
  ilp::IlpModel model;
  DfjMapping mapping;
};

struct MtzModel {
  ilp::IlpModel model;
  MtzMapping mapping;
};

// Degree equalities (undirected: Z-degree 2; directed: Z in/out-degree 1),
// the two constraints excluding x and y, and z_e + z_e' = 1 for every
// parallel pair. No subtour elimination constraints.
DfjModel build_dfj_base(const UnionMultigraph& g);

// Subtour elimination constraint for vertex set S over the DFJ variables.
// Side Z: sum over E_S of z_e <= |S| - 1.
// Side W: sum over E_S of z_e >= |E_S| - |S| + 1.
// E_S counts every edge (parallel copies included) with both ends in S.
// Throws InputError unless S is a non-empty proper subset of V.
ilp::LinearConstraint sec_for_subtour(const UnionMultigraph& g,
                                      const DfjMapping& mapping,
                                      std::span<const Vertex> subset,
                                      Side side);

// Throws InputError on an undirected graph.
MtzModel build_mtz_directed(const UnionMultigraph& g);

// Throws InputError on a directed graph.
MtzModel build_mtz_undirected(const UnionMultigraph& g);

// Translate a feasible assignment back into a pair of 2-factors. Throws
// ContractError if the result violates the factor-degree contract.
TwoFactorPair decode(std::span<const ilp::Value> assignment,
                     const DfjMapping& mapping, const UnionMultigraph& g);
TwoFactorPair decode(std::span<const ilp::Value> assignment,
                     const MtzMapping& mapping, const UnionMultigraph& g);

}  // namespace hamdec
