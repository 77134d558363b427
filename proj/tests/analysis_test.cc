#include <map>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "random_expr.h"
#include "seqcirc/analysis.h"
#include "seqcirc/oracle.h"
#include "seqcirc/parser.h"

namespace seqcirc {
namespace {

MarkedExpr M(std::string_view pattern) { return Mark(Parse(pattern)); }

TEST(EpsTest, Examples) {
  EXPECT_FALSE(Eps(M("(ab|b)*ba")));
  EXPECT_TRUE(Eps(M("(ab|b)*")));
  EXPECT_TRUE(Eps(M("a?")));
  EXPECT_FALSE(Eps(M("a+")));
  EXPECT_TRUE(Eps(M("(a?)+")));
  EXPECT_TRUE(Eps(M("a|b*")));
  EXPECT_FALSE(Eps(M("a*b")));
}

TEST(OutsTest, Examples) {
  EXPECT_EQ(Outs(M("(ab|b)*ba")), (PositionSet{5}));
  EXPECT_EQ(Outs(M("(ab|b)*")), (PositionSet{2, 3}));
  EXPECT_EQ(Outs(M("ab?")), (PositionSet{1, 2}));
  EXPECT_EQ(Outs(M("a*b*")), (PositionSet{1, 2}));
}

// Per-node annotations of the running example's syntax tree.
TEST(PositionAnalysisTest, RunningExampleAnnotations) {
  const MarkedExpr m = M("(ab|b)*ba");
  const PositionAnalysis analysis(m);
  std::map<std::string, std::pair<bool, PositionSet>> got;
  for (NodeId id = 0; id < static_cast<NodeId>(m.expr().node_count()); ++id) {
    got[RenderMarked(m, id)] = {analysis.eps(id), analysis.outs(id)};
  }
  const std::map<std::string, std::pair<bool, PositionSet>> want = {
      {"(a1b2|b3)*b4a5", {false, {5}}},
      {"(a1b2|b3)*b4", {false, {4}}},
      {"(a1b2|b3)*", {true, {2, 3}}},
      {"a1b2|b3", {false, {2, 3}}},
      {"a1b2", {false, {2}}},
      {"a1", {false, {1}}},
      {"b2", {false, {2}}},
      {"b3", {false, {3}}},
      {"b4", {false, {4}}},
      {"a5", {false, {5}}},
  };
  EXPECT_EQ(got, want);
}

TEST(TrigsTest, RunningExampleTable) {
  const std::vector<Trigger> want = {
      {1, 'a', {0, 2, 3}}, {2, 'b', {1}}, {3, 'b', {0, 2, 3}},
      {4, 'b', {0, 2, 3}}, {5, 'a', {4}},
  };
  EXPECT_EQ(Trigs(M("(ab|b)*ba"), {0}), want);
}

TEST(TrigsTest, BaseRule) {
  EXPECT_EQ(Trigs(M("a"), {0}), (std::vector<Trigger>{{1, 'a', {0}}}));
}

TEST(TrigsTest, PlusFeedsItsOwnOutputs) {
  EXPECT_EQ(Trigs(M("a+"), {0}), (std::vector<Trigger>{{1, 'a', {0, 1}}}));
}

TEST(TrigsTest, OptPassesIncomingUnchanged) {
  EXPECT_EQ(Trigs(M("a?b"), {0}),
            (std::vector<Trigger>{{1, 'a', {0}}, {2, 'b', {0, 1}}}));
}

TEST(TrigsTest, ArbitraryIncomingSet) {
  EXPECT_EQ(Trigs(M("ab"), {7, 9}),
            (std::vector<Trigger>{{1, 'a', {7, 9}}, {2, 'b', {1}}}));
}

TEST(TrigsTest, SkippableLeftOperandForwardsIncoming) {
  EXPECT_EQ(Trigs(M("a*b*c"), {0}),
            (std::vector<Trigger>{
                {1, 'a', {0, 1}}, {2, 'b', {0, 1, 2}}, {3, 'c', {0, 1, 2}}}));
}

// Properties over random expressions.
TEST(AnalysisPropertyTest, StructuralInvariants) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const MarkedExpr m = Mark(testing::RandomExpr(rng, 12, "abc"));
    const PositionAnalysis analysis(m);
    const std::vector<Trigger> triggers = analysis.Trigs({0});
    ASSERT_EQ(triggers.size(), static_cast<size_t>(m.size()));
    for (size_t k = 0; k < triggers.size(); ++k) {
      const Trigger& t = triggers[k];
      ASSERT_EQ(t.position, k + 1);
      ASSERT_EQ(t.letter, m.letter(t.position));
      ASSERT_FALSE(t.trigger_set.empty());
      ASSERT_LE(t.trigger_set.max(), static_cast<uint32_t>(m.size()));
    }
    const PositionSet& outs = analysis.root_outs();
    ASSERT_FALSE(outs.empty());
    ASSERT_FALSE(outs.Contains(0));
    ASSERT_LE(outs.max(), static_cast<uint32_t>(m.size()));

    // Skippable exactly when the empty word is in the language.
    ASSERT_EQ(analysis.root_eps(), OracleMatch(m, "", MatchMode::kFullMatch));
  }
}

}  // namespace
}  // namespace seqcirc
