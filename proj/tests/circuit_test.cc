#include <random>

#include "gtest/gtest.h"
#include "random_expr.h"
#include "seqcirc/circuit.h"
#include "seqcirc/parser.h"
#include "seqcirc/workload.h"

namespace seqcirc {
namespace {

Circuit Build(std::string_view pattern, StartMode mode) {
  return Circuit::Build(Mark(Parse(pattern)), mode);
}

TEST(CircuitTest, RunningExampleListing) {
  const Circuit c = Build("((ab)|b)*ba", StartMode::kAnchored);
  EXPECT_EQ(c.Dump(),
            "m = 5\n"
            "mode = anchored\n"
            "eps = 0\n"
            "V0 := (1,0,0,0,0,0)\n"
            "F0 := 0\n"
            "F1 := (X = a) & (V(0) | V(2) | V(3))\n"
            "F2 := (X = b) & V(1)\n"
            "F3 := (X = b) & (V(0) | V(2) | V(3))\n"
            "F4 := (X = b) & (V(0) | V(2) | V(3))\n"
            "F5 := (X = a) & V(4)\n"
            "Y := (X = a) & V(4)\n");
  EXPECT_EQ(c.initial_valuation(), StateVector::FromBits({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(c.output_set(), (PositionSet{5}));
  EXPECT_FALSE(c.skippable());
}

TEST(CircuitTest, SingleLetter) {
  const Circuit c = Build("a", StartMode::kAnchored);
  EXPECT_EQ(c.positions(), 1);
  EXPECT_EQ(c.initial_valuation(), StateVector::FromBits({1, 0}));
  EXPECT_EQ(c.trigger(1), (Trigger{1, 'a', {0}}));
  EXPECT_EQ(c.output_set(), (PositionSet{1}));
}

TEST(CircuitTest, AnywhereDiffersOnlyInStartFunction) {
  const Circuit anchored = Build("(ab|b)*ba", StartMode::kAnchored);
  const Circuit anywhere = Build("(ab|b)*ba", StartMode::kAnywhere);
  EXPECT_EQ(anchored.triggers(), anywhere.triggers());
  EXPECT_EQ(anchored.output_set(), anywhere.output_set());
  EXPECT_EQ(anchored.initial_valuation(), anywhere.initial_valuation());
  EXPECT_EQ(anchored.skippable(), anywhere.skippable());
  std::string a = anchored.Dump();
  std::string b = anywhere.Dump();
  EXPECT_NE(a.find("F0 := 0"), std::string::npos);
  EXPECT_NE(b.find("F0 := 1"), std::string::npos);
  a.replace(a.find("anchored"), 8, "anywhere");
  a.replace(a.find("F0 := 0"), 7, "F0 := 1");
  EXPECT_EQ(a, b);
}

TEST(CircuitTest, MultipleOutputsAndSkippableY) {
  const Circuit c = Build("a*b*", StartMode::kAnywhere);
  EXPECT_TRUE(c.skippable());
  EXPECT_NE(c.Dump().find("Y := ((X = a) & (V(0) | V(1))) | "
                          "((X = b) & (V(0) | V(1) | V(2))) | 1\n"),
            std::string::npos)
      << c.Dump();
}

TEST(CircuitTest, PositionLimit) {
  const MarkedExpr m = Mark(Parse(std::string(5000, 'a')));
  EXPECT_THROW(Circuit::Build(m, StartMode::kAnchored), CircuitError);
  BuildOptions options;
  options.max_positions = 5000;
  EXPECT_EQ(Circuit::Build(m, StartMode::kAnchored, options).state_bits(),
            5001u);
  options.max_positions = 10;
  EXPECT_THROW(Circuit::Build(Mark(Parse("abcdefghijk")),
                              StartMode::kAnchored, options),
               CircuitError);
}

TEST(CircuitTest, LayoutGroupsPositionsByLetter) {
  const Circuit c = Build("(ab|b)*ba", StartMode::kAnchored);
  ASSERT_EQ(c.word_count(), 1u);
  ASSERT_EQ(c.letter_end('a') - c.letter_begin('a'), 2u);
  ASSERT_EQ(c.letter_end('b') - c.letter_begin('b'), 3u);
  EXPECT_EQ(c.letter_end('z'), c.letter_begin('z'));
  EXPECT_EQ(c.entry_position(c.letter_begin('a')), 1u);
  EXPECT_EQ(*c.entry_mask(c.letter_begin('a')), 0b1101u);  // {0,2,3}
  EXPECT_EQ(c.accept_mask()[0], 0b100000u);               // {5}
}

TEST(CircuitTest, WideCircuitMasks) {
  const Circuit c = Build(GeneratePattern(PatternFamily::OptPow(40)),
                          StartMode::kAnchored);
  EXPECT_EQ(c.state_bits(), 81u);
  EXPECT_EQ(c.word_count(), 2u);
  // Position 80 (last 'a') is triggered by position 79 only.
  EXPECT_EQ(c.trigger(80).trigger_set, (PositionSet{79}));
}

TEST(CircuitPropertyTest, LinearSizeAndDeterminism) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Expr e = testing::RandomExpr(rng, 20, "abc");
    const Circuit c1 = Circuit::Build(Mark(e), StartMode::kAnchored);
    const Circuit c2 = Circuit::Build(Mark(e), StartMode::kAnchored);
    ASSERT_EQ(c1.state_bits(), static_cast<size_t>(e.letter_count()) + 1);
    ASSERT_EQ(c1.triggers().size(), static_cast<size_t>(e.letter_count()));
    ASSERT_EQ(c1.Dump(), c2.Dump());
    for (uint32_t i : c1.output_set()) {
      ASSERT_GE(i, 1u);
      ASSERT_LE(i, static_cast<uint32_t>(c1.positions()));
    }
  }
}

TEST(StateVectorTest, Basics) {
  StateVector v(130);
  EXPECT_TRUE(v.None());
  v.Set(129, true);
  v.Set(64, true);
  EXPECT_TRUE(v.Get(129));
  EXPECT_TRUE(v.Get(64));
  EXPECT_FALSE(v.Get(63));
  EXPECT_EQ(v.words().size(), 3u);
  v.Set(129, false);
  EXPECT_FALSE(v.Get(129));
  v.Reset();
  EXPECT_TRUE(v.None());
  EXPECT_EQ(StateVector::FromBits({1, 0, 1}).ToString(), "(1,0,1)");
}

}  // namespace
}  // namespace seqcirc

namespace seqcirc {
namespace {

TEST(CircuitTablesTest, ActivationRows) {
  const Circuit c = Circuit::Build(Mark(Parse("(ab|b)*ba")), StartMode::kAnchored);
  ASSERT_TRUE(c.has_tables());
  EXPECT_EQ(c.chunk_count(), 1u);
  // Positions reading 'a' are 1 and 5.
  EXPECT_EQ(*c.letter_mask('a'), 0b100010u);
  EXPECT_EQ(*c.letter_mask('z'), 0u);
  // From position 0: 1, 3, 4. From position 4: 5.
  EXPECT_EQ(*c.activation(0, 0b1), 0b11010u);
  EXPECT_EQ(*c.activation(0, 0b10000), 0b100000u);
  EXPECT_EQ(*c.activation(0, 0b10001), 0b111010u);
  EXPECT_EQ(*c.activation(0, 0), 0u);

  BuildOptions small;
  small.max_table_bytes = 1024;
  EXPECT_FALSE(Circuit::Build(Mark(Parse("(ab|b)*ba")), StartMode::kAnchored,
                              small)
                   .has_tables());
}

}  // namespace
}  // namespace seqcirc
