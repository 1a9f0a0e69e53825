#include <gtest/gtest.h>

#include <chrono>
#include <string>

#include "hamdec/errors.hpp"
#include "hamdec/formulations.hpp"
#include "hamdec/ilp.hpp"
#include "hamdec/instance_gen.hpp"
#include "hamdec/rng.hpp"
#include "reference_oracles.hpp"

namespace hamdec::ilp {
namespace {

using namespace std::chrono_literals;

LinearConstraint le(std::vector<Term> terms, Value rhs) {
  return LinearConstraint{"", std::move(terms), Sense::LessEqual, rhs};
}

TEST(IlpModel, NormalisesTermsOnInsertion) {
  IlpModel m;
  const VarId a = m.add_binary("a");
  const VarId b = m.add_binary("b");
  m.add_constraint(le({{2, b}, {1, a}, {-2, b}, {3, a}}, 3));
  const LinearConstraint& c = m.constraints()[0];
  EXPECT_EQ(c.name, "c0");
  EXPECT_EQ(c.terms, (std::vector<Term>{{4, a}}));
}

TEST(IlpModel, RejectsEmptyBoundsAndUndeclaredVariables) {
  IlpModel m;
  EXPECT_THROW(m.add_integer("x", 3, 2), InputError);
  m.add_binary("a");
  EXPECT_THROW(m.add_constraint(le({{1, 1}}, 0)), InputError);
  EXPECT_THROW(m.add_constraint(le({{1, -1}}, 0)), InputError);
}

TEST(IlpModel, SatisfiesChecksBoundsAndConstraints) {
  IlpModel m;
  const VarId x = m.add_integer("x", 2, 5);
  const VarId b = m.add_binary("b");
  m.add_constraint(
      LinearConstraint{"eq", {{1, x}, {2, b}}, Sense::Equal, 6});
  EXPECT_TRUE(m.satisfies(std::vector<Value>{4, 1}));
  EXPECT_FALSE(m.satisfies(std::vector<Value>{6, 0}));
  EXPECT_FALSE(m.satisfies(std::vector<Value>{2, 1}));
  EXPECT_FALSE(m.satisfies(std::vector<Value>{4, 2}));
}

TEST(Solve, EmptyConstraintWithNegativeRhsIsInfeasible) {
  IlpModel m;
  m.add_binary("a");
  m.add_constraint(le({}, -1));
  EXPECT_EQ(solve(m, 1000ms).status, SolveStatus::Infeasible);
}

TEST(Solve, EmptyModelIsFeasible) {
  const SolveOutcome out = solve(IlpModel{}, 1000ms);
  EXPECT_EQ(out.status, SolveStatus::Feasible);
  EXPECT_TRUE(out.assignment.empty());
}

IlpModel random_model(Rng& rng) {
  IlpModel m;
  const int binaries = 1 + static_cast<int>(rng.below(5));
  const int integers = static_cast<int>(rng.below(3));
  for (int i = 0; i < binaries; ++i) m.add_binary("b" + std::to_string(i));
  for (int i = 0; i < integers; ++i) {
    const Value lo = static_cast<Value>(rng.below(5)) - 2;
    m.add_integer("i" + std::to_string(i), lo,
                  lo + static_cast<Value>(rng.below(4)));
  }
  const int rows = 1 + static_cast<int>(rng.below(5));
  for (int r = 0; r < rows; ++r) {
    LinearConstraint c;
    for (VarId v = 0; v < m.var_count(); ++v) {
      if (rng.coin()) {
        c.terms.push_back(Term{static_cast<Value>(rng.below(7)) - 3, v});
      }
    }
    c.sense = static_cast<Sense>(rng.below(3));
    c.rhs = static_cast<Value>(rng.below(9)) - 4;
    m.add_constraint(std::move(c));
  }
  return m;
}

TEST(Solve, AgreesWithBruteForceOnRandomModels) {
  Rng rng(31);
  int feasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const IlpModel m = random_model(rng);
    const SolveOutcome out = solve(m, 5000ms);
    ASSERT_NE(out.status, SolveStatus::TimedOut);
    const bool expected = testing::brute_force_feasible(m);
    ASSERT_EQ(out.status == SolveStatus::Feasible, expected) << "trial " << trial;
    if (expected) {
      ++feasible;
      ASSERT_TRUE(m.satisfies(out.assignment));
    }
  }
  EXPECT_GT(feasible, 50);
  EXPECT_LT(feasible, 450);
}

TEST(Solve, AgreesWithBruteForceOnDfjBaseModels) {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const Instance inst = generate_instance(
        {seed % 2 ? InstanceKind::Pyramidal : InstanceKind::RandomPermutation,
         n, seed % 3 == 0, seed});
    const DfjModel dfj = build_dfj_base(inst.graph);
    const SolveOutcome out = solve(dfj.model, 5000ms);
    ASSERT_NE(out.status, SolveStatus::TimedOut);
    EXPECT_EQ(out.status == SolveStatus::Feasible,
              testing::brute_force_feasible(dfj.model))
        << "seed " << seed;
  }
}

// n + 1 pigeons, n holes: infeasible, and exponential for plain branching.
IlpModel pigeonhole(int holes) {
  IlpModel m;
  const int pigeons = holes + 1;
  for (int p = 0; p < pigeons; ++p) {
    for (int h = 0; h < holes; ++h) {
      m.add_binary("p" + std::to_string(p) + "_" + std::to_string(h));
    }
  }
  auto id = [holes](int p, int h) { return static_cast<VarId>(p * holes + h); };
  for (int p = 0; p < pigeons; ++p) {
    LinearConstraint c{"", {}, Sense::GreaterEqual, 1};
    for (int h = 0; h < holes; ++h) c.terms.push_back(Term{1, id(p, h)});
    m.add_constraint(std::move(c));
  }
  for (int h = 0; h < holes; ++h) {
    LinearConstraint c{"", {}, Sense::LessEqual, 1};
    for (int p = 0; p < pigeons; ++p) c.terms.push_back(Term{1, id(p, h)});
    m.add_constraint(std::move(c));
  }
  return m;
}

TEST(Solve, SmallPigeonholeIsInfeasible) {
  EXPECT_EQ(solve(pigeonhole(4), 10000ms).status, SolveStatus::Infeasible);
}

TEST(Solve, TimesOutOnLargePigeonhole) {
  const SolveOutcome out = solve(pigeonhole(14), 20ms);
  EXPECT_EQ(out.status, SolveStatus::TimedOut);
  EXPECT_TRUE(out.assignment.empty());
  EXPECT_LT(out.stats.elapsed, std::chrono::nanoseconds(2s));
}

TEST(SolveStatus, Names) {
  EXPECT_STREQ(to_string(SolveStatus::Feasible), "feasible");
  EXPECT_STREQ(to_string(SolveStatus::Infeasible), "infeasible");
  EXPECT_STREQ(to_string(SolveStatus::TimedOut), "timeout");
}

}  // namespace
}  // namespace hamdec::ilp
