#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "hamdec/errors.hpp"
#include "hamdec/instance_gen.hpp"
#include "hamdec/oracle.hpp"
#include "reference_oracles.hpp"

namespace hamdec {
namespace {

using OrderPair = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

OrderPair orders(const Decomposition& d, bool directed) {
  auto a = testing::normalise({d.first.order().begin(), d.first.order().end()},
                              directed);
  auto b = testing::normalise(
      {d.second.order().begin(), d.second.order().end()}, directed);
  if (b < a) std::swap(a, b);
  return {a, b};
}

std::multiset<std::pair<Vertex, Vertex>> keys(const HamCycle& c) {
  std::multiset<std::pair<Vertex, Vertex>> out;
  const auto o = c.order();
  for (std::size_t i = 0; i < o.size(); ++i) {
    const Vertex a = o[i];
    const Vertex b = o[(i + 1) % o.size()];
    out.insert(c.directed() ? std::pair{a, b} : std::pair{std::min(a, b), std::max(a, b)});
  }
  return out;
}

std::multiset<std::pair<Vertex, Vertex>> keys(const UnionMultigraph& g) {
  std::multiset<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) {
    out.insert(g.directed() ? std::pair{e.tail, e.head}
                            : std::pair{std::min(e.tail, e.head),
                                        std::max(e.tail, e.head)});
  }
  return out;
}

// The six-vertex example union has four decompositions: {x, y}, {z, w} and two more.
TEST(Oracle, SixVertexExampleDecompositions) {
  const Instance inst = testing::six_vertex_example();
  const auto all = enumerate_decompositions(inst.graph);
  EXPECT_EQ(all.size(), 4u);
  const auto given = make_decomposition(inst.x, inst.y);
  const auto witness = make_decomposition(HamCycle(testing::kExampleZ, false),
                                          HamCycle(testing::kExampleW, false));
  EXPECT_NE(std::find(all.begin(), all.end(), given), all.end());
  EXPECT_NE(std::find(all.begin(), all.end(), witness), all.end());

  const OracleReport report = has_second_decomposition(inst.graph, inst.x, inst.y);
  EXPECT_EQ(report.decompositions, 4);
  ASSERT_TRUE(report.second_exists());
  EXPECT_FALSE(*report.second == given);
}

TEST(Oracle, IdenticalTrianglesHaveOnlyTheGivenPair) {
  const Instance inst = testing::make_instance({1, 2, 3}, {1, 2, 3}, false);
  EXPECT_EQ(enumerate_decompositions(inst.graph).size(), 1u);
  EXPECT_FALSE(has_second_decomposition(inst.graph, inst.x, inst.y).second_exists());
}

TEST(Oracle, MatchesCyclePairingReference) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const bool directed = seed % 2 == 1;
    const auto kind = seed % 3 == 0 ? InstanceKind::Pyramidal
                                    : InstanceKind::RandomPermutation;
    const Instance inst = generate_instance({kind, 8, directed, seed});
    std::set<OrderPair> got;
    for (const Decomposition& d : enumerate_decompositions(inst.graph)) {
      got.insert(orders(d, directed));
    }
    EXPECT_EQ(got, testing::decompositions_by_cycle_pairs(inst.graph))
        << "seed " << seed;
  }
}

TEST(Oracle, OutputIsValidSortedAndDuplicateFree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = generate_instance(
        {InstanceKind::Pyramidal, 10 + static_cast<int>(seed % 3), seed % 2 == 0, seed});
    const auto all = enumerate_decompositions(inst.graph);
    ASSERT_FALSE(all.empty());
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Decomposition& d = all[i];
      EXPECT_LE(std::vector<Vertex>(d.first.order().begin(), d.first.order().end()),
                std::vector<Vertex>(d.second.order().begin(), d.second.order().end()));
      auto both = keys(d.first);
      const auto second = keys(d.second);
      both.insert(second.begin(), second.end());
      EXPECT_EQ(both, keys(inst.graph));
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        EXPECT_FALSE(all[i] == all[j]);
      }
    }
  }
}

TEST(Oracle, RejectsLargeInstances) {
  const Instance big = generate_instance(
      {InstanceKind::RandomPermutation, kOracleMaxN + 1, false, 1});
  EXPECT_THROW(enumerate_decompositions(big.graph), InputError);
  const Instance ok = generate_instance(
      {InstanceKind::RandomPermutation, kOracleMaxN, false, 1});
  EXPECT_NO_THROW(enumerate_decompositions(ok.graph));
}

TEST(Oracle, SecondDecompositionIsNotTheGivenPair) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst =
        generate_instance({InstanceKind::FourPeak, 9, seed % 2 == 0, seed});
    const OracleReport r = has_second_decomposition(inst.graph, inst.x, inst.y);
    EXPECT_EQ(r.second_exists(), r.decompositions > 1);
    if (r.second_exists()) {
      EXPECT_FALSE(*r.second == make_decomposition(inst.x, inst.y));
    }
  }
}

}  // namespace
}  // namespace hamdec
