#include <set>
#include <stdexcept>

#include "gtest/gtest.h"
#include "seqcirc/circuit.h"
#include "seqcirc/parser.h"
#include "seqcirc/workload.h"

namespace seqcirc {
namespace {

int Positions(const PatternFamily& f) {
  return Mark(Parse(GeneratePattern(f))).size();
}

TEST(WorkloadTest, Patterns) {
  EXPECT_EQ(GeneratePattern(PatternFamily::AlphabetChain()),
            "abcdefghijklmnopqrstuvwxyz");
  EXPECT_EQ(GeneratePattern(PatternFamily::PrefixedAlphabetChain()),
            "(x|y|z)abcdefghijklmnopqrstuvwxyz");
  EXPECT_EQ(GeneratePattern(PatternFamily::OptPow(2)), "(a?)(a?)aa");
  EXPECT_EQ(GeneratePattern(PatternFamily::NondetSuffix(2)),
            "((a|b)*)a(a|b)(a|b)");
  EXPECT_EQ(GeneratePattern(PatternFamily::RunningExample()), "(ab|b)*ba");
  EXPECT_THROW(GeneratePattern(PatternFamily::OptPow(0)),
               std::invalid_argument);
  EXPECT_THROW(GeneratePattern(PatternFamily::NondetSuffix(-1)),
               std::invalid_argument);
}

TEST(WorkloadTest, PositionCounts) {
  EXPECT_EQ(Positions(PatternFamily::AlphabetChain()), 26);
  EXPECT_EQ(Positions(PatternFamily::PrefixedAlphabetChain()), 29);
  EXPECT_EQ(Positions(PatternFamily::RunningExample()), 5);
  for (int n : {1, 5, 20, 100}) {
    EXPECT_EQ(Positions(PatternFamily::OptPow(n)), 2 * n);
    EXPECT_EQ(Positions(PatternFamily::NondetSuffix(n)), 2 * n + 3);
  }
}

TEST(WorkloadTest, Names) {
  for (auto kind :
       {PatternFamilyKind::kAlphabetChain,
        PatternFamilyKind::kPrefixedAlphabetChain, PatternFamilyKind::kOptPow,
        PatternFamilyKind::kNondetSuffix, PatternFamilyKind::kRunningExample}) {
    EXPECT_EQ(ParsePatternFamilyName(PatternFamilyName(kind)), kind);
  }
  EXPECT_FALSE(ParsePatternFamilyName("bogus").has_value());
  EXPECT_EQ(DefaultAlphabet(PatternFamilyKind::kNondetSuffix), "ab");
  EXPECT_EQ(DefaultAlphabet(PatternFamilyKind::kOptPow), kLowercaseAlphabet);
}

TEST(WorkloadTest, InputIsDeterministic) {
  const std::string a = GenerateInput("ab", 4, 42);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(a, GenerateInput("ab", 4, 42));
  EXPECT_EQ(a, GenerateInput("bab", 4, 42));  // duplicates are ignored
  const std::string big = GenerateInput(kLowercaseAlphabet, 100000, 7);
  EXPECT_EQ(big, GenerateInput(kLowercaseAlphabet, 100000, 7));
  EXPECT_NE(big, GenerateInput(kLowercaseAlphabet, 100000, 8));
  EXPECT_EQ(GenerateInput("x", 0, 1), "");
}

TEST(WorkloadTest, InputUsesWholeAlphabet) {
  const std::string s = GenerateInput(kLowercaseAlphabet, 100000, 3);
  const std::set<char> seen(s.begin(), s.end());
  EXPECT_EQ(seen.size(), 26u);
  EXPECT_EQ(*seen.begin(), 'a');
  EXPECT_EQ(*seen.rbegin(), 'z');
  EXPECT_THROW(GenerateInput("", 10, 1), std::invalid_argument);
}

}  // namespace
}  // namespace seqcirc
