#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hamdec::ilp {

using VarId = std::int32_t;
using Value = std::int64_t;

enum class VarKind : std::uint8_t { Binary, Integer };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Binary;
  Value lo = 0;
  Value hi = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

enum class Sense : std::uint8_t { LessEqual, GreaterEqual, Equal };

struct Term {
  Value coef = 0;
  VarId var = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  Value rhs = 0;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

// A pure integer feasibility model: integer-bounded variables and linear
// constraints with integer data. Constraints are normalised on insertion
// (unnamed ones become "c<index>"):
// terms on the same variable are merged and zero coefficients dropped, with
// terms sorted by variable id.
class IlpModel {
 public:
  VarId add_binary(std::string name);
  VarId add_integer(std::string name, Value lo, Value hi);

  // Returns the constraint index. Throws InputError on undeclared variables.
  std::size_t add_constraint(LinearConstraint constraint);

  std::span<const Variable> vars() const { return vars_; }
  std::span<const LinearConstraint> constraints() const {
    return constraints_;
  }
  const Variable& var(VarId id) const { return vars_[id]; }
  int var_count() const { return static_cast<int>(vars_.size()); }

  // Exact check of bounds, integrality-by-construction and every constraint.
  bool satisfies(std::span<const Value> assignment) const;
  bool satisfies(const LinearConstraint& c,
                 std::span<const Value> assignment) const;

  friend bool operator==(const IlpModel&, const IlpModel&) = default;

 private:
  std::vector<Variable> vars_;
  std::vector<LinearConstraint> constraints_;
};

enum class SolveStatus { Feasible, Infeasible, TimedOut };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::TimedOut;
  std::vector<Value> assignment;  // present iff Feasible
  SolveStats stats;
};

// Depth-first branch-and-propagate. Binary variables are branched in id order
// with value 1 first; integer variables are then narrowed by domain
// splitting. Bounds propagation runs to a fixpoint at every node. A Feasible
// assignment is re-verified against the whole model before returning;
// Infeasible is reported only after the search tree is exhausted.
SolveOutcome solve(const IlpModel& model,
                   std::chrono::steady_clock::time_point deadline);

inline SolveOutcome solve(const IlpModel& model,
                          std::chrono::milliseconds budget) {
  return solve(model, std::chrono::steady_clock::now() + budget);
}

}  // namespace hamdec::ilp
