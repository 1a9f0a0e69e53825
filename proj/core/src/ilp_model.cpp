#include <algorithm>
#include <string>

#include "hamdec/errors.hpp"
#include "hamdec/ilp.hpp"

namespace hamdec::ilp {

VarId IlpModel::add_binary(std::string name) {
  vars_.push_back(Variable{std::move(name), VarKind::Binary, 0, 1});
  return static_cast<VarId>(vars_.size() - 1);
}

VarId IlpModel::add_integer(std::string name, Value lo, Value hi) {
  if (lo > hi) {
    throw InputError("variable " + name + " has empty bounds [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  vars_.push_back(Variable{std::move(name), VarKind::Integer, lo, hi});
  return static_cast<VarId>(vars_.size() - 1);
}

std::size_t IlpModel::add_constraint(LinearConstraint constraint) {
  if (constraint.name.empty()) {
    constraint.name = "c" + std::to_string(constraints_.size());
  }
  auto& terms = constraint.terms;
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= var_count()) {
      throw InputError("constraint " + constraint.name +
                       " references undeclared variable " +
                       std::to_string(t.var));
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
  terms = std::move(merged);
  constraints_.push_back(std::move(constraint));
  return constraints_.size() - 1;
}

bool IlpModel::satisfies(const LinearConstraint& c,
                         std::span<const Value> assignment) const {
  Value activity = 0;
  for (const Term& t : c.terms) activity += t.coef * assignment[t.var];
  switch (c.sense) {
    case Sense::LessEqual:
      return activity <= c.rhs;
    case Sense::GreaterEqual:
      return activity >= c.rhs;
    case Sense::Equal:
      return activity == c.rhs;
  }
  return false;
}

bool IlpModel::satisfies(std::span<const Value> assignment) const {
  if (static_cast<int>(assignment.size()) != var_count()) return false;
  for (VarId v = 0; v < var_count(); ++v) {
    if (assignment[v] < vars_[v].lo || assignment[v] > vars_[v].hi) {
      return false;
    }
  }
  return std::all_of(
      constraints_.begin(), constraints_.end(),
      [&](const LinearConstraint& c) { return satisfies(c, assignment); });
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Feasible:
      return "feasible";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::TimedOut:
      return "timeout";
  }
  return "unknown";
}

}  // namespace hamdec::ilp
