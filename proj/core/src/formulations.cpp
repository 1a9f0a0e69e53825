#include "hamdec/formulations.hpp"

#include <string>

#include "hamdec/errors.hpp"

namespace hamdec {

using ilp::LinearConstraint;
using ilp::Sense;
using ilp::Term;
using ilp::VarId;

namespace {

std::string vname(char prefix, int index) {
  return std::string(1, prefix) + "_" + std::to_string(index);
}

LinearConstraint make(std::string name, std::vector<Term> terms, Sense sense,
                      ilp::Value rhs) {
  return LinearConstraint{std::move(name), std::move(terms), sense, rhs};
}

// Sum over a set of edges of the given per-edge variables <= |set| - 1.
template <typename VarsOf>
LinearConstraint forbid(std::string name, const std::vector<EdgeId>& edges,
                        VarsOf vars_of) {
  std::vector<Term> terms;
  for (EdgeId e : edges) {
    for (VarId v : vars_of(e)) terms.push_back(Term{1, v});
  }
  return make(std::move(name), std::move(terms), Sense::LessEqual,
              static_cast<ilp::Value>(edges.size()) - 1);
}

void add_order_variables(const UnionMultigraph& g, ilp::IlpModel& model,
                         MtzMapping& mapping) {
  const int n = g.n();
  mapping.alpha.assign(n + 1, -1);
  mapping.beta.assign(n + 1, -1);
  for (Vertex v = 2; v <= n; ++v) {
    mapping.alpha[v] = model.add_integer(vname('a', v), 2, n);
  }
  for (Vertex v = 2; v <= n; ++v) {
    mapping.beta[v] = model.add_integer(vname('b', v), 2, n);
  }
}

// order_i - order_j + sum(uses) <= rhs
LinearConstraint order_constraint(std::string name, VarId order_i,
                                  VarId order_j, std::vector<Term> uses,
                                  ilp::Value rhs) {
  uses.push_back(Term{1, order_i});
  uses.push_back(Term{-1, order_j});
  return make(std::move(name), std::move(uses), Sense::LessEqual, rhs);
}

}  // namespace

DfjModel build_dfj_base(const UnionMultigraph& g) {
  DfjModel out;
  auto& model = out.model;
  auto& mapping = out.mapping;
  for (const Edge& e : g.edges()) {
    mapping.z.push_back(model.add_binary(vname('z', e.id)));
  }
  mapping.unique_x = g.unique_edges(Origin::FromX);
  mapping.unique_y = g.unique_edges(Origin::FromY);

  for (Vertex v = 1; v <= g.n(); ++v) {
    if (g.directed()) {
      std::vector<Term> out_terms;
      std::vector<Term> in_terms;
      for (EdgeId e : g.out_arcs(v)) out_terms.push_back(Term{1, mapping.z[e]});
      for (EdgeId e : g.in_arcs(v)) in_terms.push_back(Term{1, mapping.z[e]});
      model.add_constraint(make("out_" + std::to_string(v),
                                std::move(out_terms), Sense::Equal, 1));
      model.add_constraint(make("in_" + std::to_string(v), std::move(in_terms),
                                Sense::Equal, 1));
    } else {
      std::vector<Term> terms;
      for (EdgeId e : g.incident(v)) terms.push_back(Term{1, mapping.z[e]});
      model.add_constraint(
          make("deg_" + std::to_string(v), std::move(terms), Sense::Equal, 2));
    }
  }

  auto z_of = [&mapping](EdgeId e) { return std::vector<VarId>{mapping.z[e]}; };
  model.add_constraint(forbid("forbid_x", mapping.unique_x, z_of));
  model.add_constraint(forbid("forbid_y", mapping.unique_y, z_of));

  for (const Edge& e : g.edges()) {
    if (e.partner && e.id < *e.partner) {
      model.add_constraint(make(
          "pair_" + std::to_string(e.id) + "_" + std::to_string(*e.partner),
          {Term{1, mapping.z[e.id]}, Term{1, mapping.z[*e.partner]}},
          Sense::Equal, 1));
    }
  }
  return out;
}

LinearConstraint sec_for_subtour(const UnionMultigraph& g,
                                 const DfjMapping& mapping,
                                 std::span<const Vertex> subset, Side side) {
  std::vector<bool> inside(g.n() + 1, false);
  int size = 0;
  for (Vertex v : subset) {
    if (v < 1 || v > g.n()) throw InputError("subtour vertex out of range");
    if (!inside[v]) ++size;
    inside[v] = true;
  }
  if (size == 0 || size == g.n()) {
    throw InputError("subtour constraints need a non-empty proper subset");
  }
  std::vector<Term> terms;
  for (const Edge& e : g.edges()) {
    if (inside[e.tail] && inside[e.head]) {
      terms.push_back(Term{1, mapping.z[e.id]});
    }
  }
  const auto inner = static_cast<ilp::Value>(terms.size());
  if (side == Side::Z) {
    return make("", std::move(terms), Sense::LessEqual, size - 1);
  }
  return make("", std::move(terms), Sense::GreaterEqual, inner - size + 1);
}

MtzModel build_mtz_directed(const UnionMultigraph& g) {
  if (!g.directed()) {
    throw InputError("build_mtz_directed needs a directed multigraph");
  }
  // The DFJ base already has exactly the variables and constraints the
  // directed model starts from.
  DfjModel base = build_dfj_base(g);
  MtzModel out;
  out.model = std::move(base.model);
  out.mapping.directed = true;
  out.mapping.z = std::move(base.mapping.z);
  add_order_variables(g, out.model, out.mapping);

  const ilp::Value n = g.n();
  const auto& m = out.mapping;
  for (const Edge& e : g.edges()) {
    if (e.tail == 1 || e.head == 1) continue;
    const auto tag = std::to_string(e.id);
    out.model.add_constraint(order_constraint(
        "ord_a_" + tag, m.alpha[e.tail], m.alpha[e.head],
        {Term{n, m.z[e.id]}}, n - 1));
    // beta_i - beta_j + n (1 - z_e) <= n - 1
    out.model.add_constraint(order_constraint(
        "ord_b_" + tag, m.beta[e.tail], m.beta[e.head],
        {Term{-n, m.z[e.id]}}, -1));
  }
  return out;
}

MtzModel build_mtz_undirected(const UnionMultigraph& g) {
  if (g.directed()) {
    throw InputError("build_mtz_undirected needs an undirected multigraph");
  }
  MtzModel out;
  auto& model = out.model;
  auto& m = out.mapping;
  m.directed = false;
  m.quad.resize(g.edge_count());
  for (const Edge& e : g.edges()) {
    const auto tag = std::to_string(e.id);
    auto& q = m.quad[e.id];
    q.z_fwd = model.add_binary("z_" + tag + "_f");
    q.z_rev = model.add_binary("z_" + tag + "_r");
    q.w_fwd = model.add_binary("w_" + tag + "_f");
    q.w_rev = model.add_binary("w_" + tag + "_r");
  }
  add_order_variables(g, model, m);

  for (const Edge& e : g.edges()) {
    const auto& q = m.quad[e.id];
    model.add_constraint(make("edge_" + std::to_string(e.id),
                              {Term{1, q.z_fwd}, Term{1, q.z_rev},
                               Term{1, q.w_fwd}, Term{1, q.w_rev}},
                              Sense::Equal, 1));
  }

  // Each factor leaves and enters every vertex exactly once.
  for (Vertex v = 1; v <= g.n(); ++v) {
    for (const bool z_factor : {true, false}) {
      std::vector<Term> out_terms;
      std::vector<Term> in_terms;
      for (EdgeId id : g.incident(v)) {
        const Edge& e = g.edge(id);
        const auto& q = m.quad[id];
        const VarId fwd = z_factor ? q.z_fwd : q.w_fwd;
        const VarId rev = z_factor ? q.z_rev : q.w_rev;
        // An edge is listed at both of its endpoints, once each.
        if (e.tail == v) {
          out_terms.push_back(Term{1, fwd});
          in_terms.push_back(Term{1, rev});
        } else {
          out_terms.push_back(Term{1, rev});
          in_terms.push_back(Term{1, fwd});
        }
      }
      const std::string f = z_factor ? "z" : "w";
      model.add_constraint(make("out_" + f + "_" + std::to_string(v),
                                std::move(out_terms), Sense::Equal, 1));
      model.add_constraint(make("in_" + f + "_" + std::to_string(v),
                                std::move(in_terms), Sense::Equal, 1));
    }
  }

  const auto unique_x = g.unique_edges(Origin::FromX);
  const auto unique_y = g.unique_edges(Origin::FromY);
  auto z_uses = [&m](EdgeId e) {
    return std::vector<VarId>{m.quad[e].z_fwd, m.quad[e].z_rev};
  };
  auto w_uses = [&m](EdgeId e) {
    return std::vector<VarId>{m.quad[e].w_fwd, m.quad[e].w_rev};
  };
  model.add_constraint(forbid("forbid_x_z", unique_x, z_uses));
  model.add_constraint(forbid("forbid_x_w", unique_x, w_uses));
  model.add_constraint(forbid("forbid_y_z", unique_y, z_uses));
  model.add_constraint(forbid("forbid_y_w", unique_y, w_uses));

  for (const Edge& e : g.edges()) {
    if (!e.partner || e.id > *e.partner) continue;
    const auto& a = m.quad[e.id];
    const auto& b = m.quad[*e.partner];
    model.add_constraint(make(
        "pair_" + std::to_string(e.id) + "_" + std::to_string(*e.partner),
        {Term{1, a.z_fwd}, Term{1, a.z_rev}, Term{1, b.z_fwd},
         Term{1, b.z_rev}},
        Sense::Equal, 1));
  }

  const ilp::Value n = g.n();
  for (const Edge& e : g.edges()) {
    if (e.tail == 1 || e.head == 1) continue;
    const auto& q = m.quad[e.id];
    const auto tag = std::to_string(e.id);
    model.add_constraint(order_constraint("ord_a_" + tag + "_f",
                                          m.alpha[e.tail], m.alpha[e.head],
                                          {Term{n, q.z_fwd}}, n - 1));
    model.add_constraint(order_constraint("ord_a_" + tag + "_r",
                                          m.alpha[e.head], m.alpha[e.tail],
                                          {Term{n, q.z_rev}}, n - 1));
    model.add_constraint(order_constraint("ord_b_" + tag + "_f",
                                          m.beta[e.tail], m.beta[e.head],
                                          {Term{n, q.w_fwd}}, n - 1));
    model.add_constraint(order_constraint("ord_b_" + tag + "_r",
                                          m.beta[e.head], m.beta[e.tail],
                                          {Term{n, q.w_rev}}, n - 1));
  }
  return out;
}

namespace {

TwoFactorPair checked(TwoFactorPair pair) {
  if (!is_two_factor_pair(pair)) {
    throw ContractError("solver assignment does not decode to two 2-factors");
  }
  return pair;
}

}  // namespace

TwoFactorPair decode(std::span<const ilp::Value> assignment,
                     const DfjMapping& mapping, const UnionMultigraph& g) {
  std::vector<Side> sides(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sides[e] = assignment[mapping.z[e]] == 1 ? Side::Z : Side::W;
  }
  return checked(TwoFactorPair(g, std::move(sides)));
}

TwoFactorPair decode(std::span<const ilp::Value> assignment,
                     const MtzMapping& mapping, const UnionMultigraph& g) {
  std::vector<Side> sides(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mapping.directed) {
      sides[e] = assignment[mapping.z[e]] == 1 ? Side::Z : Side::W;
    } else {
      const auto& q = mapping.quad[e];
      const bool in_z = assignment[q.z_fwd] + assignment[q.z_rev] == 1;
      const bool in_w = assignment[q.w_fwd] + assignment[q.w_rev] == 1;
      if (in_z == in_w) {
        throw ContractError("edge " + std::to_string(e) +
                            " is not assigned to exactly one factor");
      }
      sides[e] = in_z ? Side::Z : Side::W;
    }
  }
  return checked(TwoFactorPair(g, std::move(sides)));
}

}  // namespace hamdec
