#include <algorithm>
#include <cassert>

#include "hamdec/errors.hpp"
#include "hamdec/ilp.hpp"

namespace hamdec::ilp {
namespace {

// Every model constraint is split into rows of the form sum(coef * x) <= rhs.
struct Row {
  std::vector<Term> terms;
  Value rhs = 0;
};

Value floor_div(Value a, Value b) {
  assert(b > 0);
  Value q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

class Engine {
 public:
  explicit Engine(const IlpModel& model) : model_(model) {
    const int n = model.var_count();
    lo_.resize(n);
    hi_.resize(n);
    for (VarId v = 0; v < n; ++v) {
      lo_[v] = model.var(v).lo;
      hi_[v] = model.var(v).hi;
    }
    watches_.resize(n);
    for (const LinearConstraint& c : model.constraints()) {
      if (c.sense != Sense::GreaterEqual) add_row(c.terms, c.rhs, 1);
      if (c.sense != Sense::LessEqual) add_row(c.terms, c.rhs, -1);
    }
    in_queue_.assign(rows_.size(), 0);
  }

  SolveOutcome run(std::chrono::steady_clock::time_point deadline) {
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome;
    outcome.status = search(deadline);
    outcome.stats.nodes = nodes_;
    if (outcome.status == SolveStatus::Feasible) {
      outcome.assignment = lo_;
      if (!model_.satisfies(outcome.assignment)) {
        throw ContractError("solver produced an assignment that violates the model");
      }
    }
    outcome.stats.elapsed = std::chrono::steady_clock::now() - start;
    return outcome;
  }

 private:
  struct TrailEntry {
    VarId var;
    Value lo;
    Value hi;
  };

  struct Decision {
    VarId var;
    std::size_t mark;
    Value alt_lo;
    Value alt_hi;
    bool alt_tried;
  };

  void add_row(const std::vector<Term>& terms, Value rhs, Value sign) {
    Row row;
    row.rhs = sign * rhs;
    row.terms.reserve(terms.size());
    for (const Term& t : terms) row.terms.push_back(Term{sign * t.coef, t.var});
    const auto index = static_cast<std::int32_t>(rows_.size());
    for (const Term& t : row.terms) watches_[t.var].push_back(index);
    rows_.push_back(std::move(row));
  }

  void enqueue(std::int32_t row) {
    if (in_queue_[row]) return;
    in_queue_[row] = 1;
    queue_.push_back(row);
  }

  void set_bounds(VarId v, Value lo, Value hi) {
    trail_.push_back(TrailEntry{v, lo_[v], hi_[v]});
    lo_[v] = lo;
    hi_[v] = hi;
    for (std::int32_t r : watches_[v]) enqueue(r);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry& e = trail_.back();
      lo_[e.var] = e.lo;
      hi_[e.var] = e.hi;
      trail_.pop_back();
    }
  }

  void clear_queue() {
    for (std::int32_t r : queue_) in_queue_[r] = 0;
    queue_.clear();
  }

  // Bounds propagation to a fixpoint. Returns false on an empty domain or an
  // unsatisfiable row.
  bool propagate() {
    std::size_t head = 0;
    while (head < queue_.size()) {
      const std::int32_t r = queue_[head++];
      in_queue_[r] = 0;
      if (!propagate_row(rows_[r])) {
        queue_.erase(queue_.begin(), queue_.begin() + static_cast<long>(head));
        clear_queue();
        return false;
      }
      if (head > 4096 && head * 2 > queue_.size()) {
        queue_.erase(queue_.begin(), queue_.begin() + static_cast<long>(head));
        head = 0;
      }
    }
    queue_.clear();
    return true;
  }

  bool propagate_row(const Row& row) {
    Value min_activity = 0;
    Value widest = 0;
    for (const Term& t : row.terms) {
      const Value range = hi_[t.var] - lo_[t.var];
      if (t.coef > 0) {
        min_activity += t.coef * lo_[t.var];
        widest = std::max(widest, t.coef * range);
      } else {
        min_activity += t.coef * hi_[t.var];
        widest = std::max(widest, -t.coef * range);
      }
    }
    const Value slack = row.rhs - min_activity;
    if (slack < 0) return false;
    if (slack >= widest) return true;
    for (const Term& t : row.terms) {
      const VarId v = t.var;
      if (t.coef > 0) {
        const Value bound = lo_[v] + floor_div(slack, t.coef);
        if (bound < hi_[v]) set_bounds(v, lo_[v], bound);
      } else {
        const Value bound = hi_[v] - floor_div(slack, -t.coef);
        if (bound > lo_[v]) set_bounds(v, bound, hi_[v]);
      }
    }
    return true;
  }

  // First unfixed binary (in id order) at or after `from`, then the first
  // unfixed integer variable.
  VarId pick_branch_var(VarId from) const {
    const VarId n = model_.var_count();
    for (VarId v = from; v < n; ++v) {
      if (lo_[v] < hi_[v] && model_.var(v).kind == VarKind::Binary) return v;
    }
    for (VarId v = 0; v < n; ++v) {
      if (lo_[v] < hi_[v]) return v;
    }
    return -1;
  }

  bool backtrack() {
    while (!decisions_.empty() && decisions_.back().alt_tried) {
      undo(decisions_.back().mark);
      decisions_.pop_back();
    }
    if (decisions_.empty()) return false;
    Decision& d = decisions_.back();
    undo(d.mark);
    d.alt_tried = true;
    set_bounds(d.var, d.alt_lo, d.alt_hi);
    return true;
  }

  SolveStatus search(std::chrono::steady_clock::time_point deadline) {
    for (std::int32_t r = 0; r < static_cast<std::int32_t>(rows_.size()); ++r) {
      enqueue(r);
    }
    for (VarId v = 0; v < model_.var_count(); ++v) {
      if (lo_[v] > hi_[v]) return SolveStatus::Infeasible;
    }
    bool consistent = propagate();
    for (;;) {
      while (!consistent) {
        if (!backtrack()) return SolveStatus::Infeasible;
        consistent = propagate();
      }
      if ((nodes_++ & 0xFF) == 0 &&
          std::chrono::steady_clock::now() >= deadline) {
        return SolveStatus::TimedOut;
      }
      const VarId from = decisions_.empty() ? 0 : decisions_.back().var;
      const VarId v = pick_branch_var(from);
      if (v < 0) return SolveStatus::Feasible;
      Decision d{v, trail_.size(), 0, 0, false};
      if (model_.var(v).kind == VarKind::Binary) {
        d.alt_lo = d.alt_hi = 0;
        decisions_.push_back(d);
        set_bounds(v, 1, 1);
      } else {
        d.alt_lo = lo_[v] + 1;
        d.alt_hi = hi_[v];
        decisions_.push_back(d);
        set_bounds(v, lo_[v], lo_[v]);
      }
      consistent = propagate();
    }
  }

  const IlpModel& model_;
  std::vector<Value> lo_;
  std::vector<Value> hi_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::int32_t>> watches_;
  std::vector<std::int32_t> queue_;
  std::vector<std::uint8_t> in_queue_;
  std::vector<TrailEntry> trail_;
  std::vector<Decision> decisions_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveOutcome solve(const IlpModel& model,
                   std::chrono::steady_clock::time_point deadline) {
  return Engine(model).run(deadline);
}

}  // namespace hamdec::ilp
