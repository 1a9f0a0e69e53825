#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hamdec/errors.hpp"
#include "hamdec/formulations.hpp"
#include "hamdec/instance_gen.hpp"
#include "hamdec/lp_format.hpp"

namespace hamdec::ilp {
namespace {

TEST(ExportLp, EmptyModel) {
  EXPECT_EQ(export_lp(IlpModel{}),
            "Minimize\n obj: 0\nSubject To\nBounds\nBinaries\nGenerals\nEnd\n");
}

TEST(ExportLp, SmallModelExactText) {
  IlpModel m;
  const VarId z = m.add_binary("z_0");
  const VarId a = m.add_integer("a_2", 2, 6);
  m.add_constraint(LinearConstraint{"r", {{1, z}, {-1, a}}, Sense::LessEqual, 4});
  m.add_constraint(LinearConstraint{"e", {}, Sense::GreaterEqual, 0});
  EXPECT_EQ(export_lp(m),
            "Minimize\n obj: 0\nSubject To\n"
            " r: +1 z_0 -1 a_2 <= 4\n"
            " e: 0 z_0 >= 0\n"
            "Bounds\n 0 <= z_0 <= 1\n 2 <= a_2 <= 6\n"
            "Binaries\n z_0\nGenerals\n a_2\nEnd\n");
}

void expect_round_trip(const IlpModel& m) {
  const std::string text = export_lp(m);
  const IlpModel back = parse_lp(text);
  EXPECT_EQ(back, m);
  EXPECT_EQ(export_lp(back), text);
}

TEST(LpRoundTrip, SixVertexExampleModels) {
  const Instance inst = testing::six_vertex_example();
  DfjModel dfj = build_dfj_base(inst.graph);
  const std::vector<Vertex> s{1, 2, 3};
  dfj.model.add_constraint(sec_for_subtour(inst.graph, dfj.mapping, s, Side::Z));
  dfj.model.add_constraint(sec_for_subtour(inst.graph, dfj.mapping, s, Side::W));
  expect_round_trip(dfj.model);
  expect_round_trip(build_mtz_undirected(inst.graph).model);
}

TEST(LpRoundTrip, DirectedAndLargerModels) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance d =
        generate_instance({InstanceKind::FourPeak, 20, true, seed});
    expect_round_trip(build_mtz_directed(d.graph).model);
    expect_round_trip(build_dfj_base(d.graph).model);
    const Instance u =
        generate_instance({InstanceKind::Pyramidal, 30, false, seed});
    expect_round_trip(build_mtz_undirected(u.graph).model);
  }
}

TEST(LpRoundTrip, NamesAreStableAcrossBuilds) {
  const Instance inst = testing::six_vertex_example();
  EXPECT_EQ(export_lp(build_dfj_base(inst.graph).model),
            export_lp(build_dfj_base(inst.graph).model));
  const IlpModel m = build_dfj_base(inst.graph).model;
  EXPECT_EQ(m.var(0).name, "z_0");
  EXPECT_EQ(m.constraints()[0].name, "deg_1");
}

TEST(ParseLp, AcceptsCommentsAndAlternateSenses) {
  const IlpModel m = parse_lp(
      "\\ comment\nMinimize\n obj: 0\nSubject To\n c: +2 x =< 3\n"
      "Bounds\n -1 <= x <= 4\nGenerals\n x\nEnd\n");
  ASSERT_EQ(m.var_count(), 1);
  EXPECT_EQ(m.var(0).lo, -1);
  EXPECT_EQ(m.constraints()[0].sense, Sense::LessEqual);
}

TEST(ParseLp, RejectsMalformedInput) {
  const char* bad[] = {
      "",
      "x\nEnd\n",
      "Minimize\n obj: 0\nSubject To\n c: +1 x <= 1\n",
      "Minimize\nSubject To\n c: +1 y <= 1\nBounds\n 0 <= x <= 1\n"
      "Binaries\n x\nEnd\n",
      "Minimize\nSubject To\n c: +a x <= 1\nBounds\n 0 <= x <= 1\n"
      "Binaries\n x\nEnd\n",
      "Minimize\nSubject To\nBounds\n 0 <= x <= 1\nEnd\n",
      "Minimize\nSubject To\nBounds\n 0 <= x <= 2\nBinaries\n x\nEnd\n",
      "Minimize\nSubject To\nBounds\nBinaries\n x\nEnd\n",
      "Minimize\nSubject To\nBounds\n 3 <= x <= 2\nGenerals\n x\nEnd\n",
      "Minimize\nSubject\n c: +1 x <= 1\nEnd\n",
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_lp(text), InputError) << text;
  }
}

}  // namespace
}  // namespace hamdec::ilp
