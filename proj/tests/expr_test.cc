#include <random>
#include <string>

#include "gtest/gtest.h"
#include "random_expr.h"
#include "seqcirc/expr.h"
#include "seqcirc/parser.h"

namespace seqcirc {
namespace {

Expr L(char c) { return Expr::Letter(static_cast<uint8_t>(c)); }

size_t ErrorOffset(std::string_view pattern) {
  try {
    Parse(pattern);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no syntax error for '" << pattern << "'";
  return std::string::npos;
}

TEST(ParseTest, RunningExample) {
  const Expr expected = Expr::Concat(
      Expr::Concat(Expr::Star(Expr::Union(Expr::Concat(L('a'), L('b')), L('b'))),
                   L('b')),
      L('a'));
  EXPECT_EQ(Parse("(ab|b)*ba"), expected);
}

TEST(ParseTest, SingleLetter) { EXPECT_EQ(Parse("a"), L('a')); }

TEST(ParseTest, SemicolonIsConcatenation) {
  EXPECT_EQ(Parse("(((a;b)|b)*);b;a"), Parse("(ab|b)*ba"));
  EXPECT_EQ(Parse("a;b"), Parse("ab"));
}

TEST(ParseTest, Precedence) {
  EXPECT_EQ(Parse("ab*"), Expr::Concat(L('a'), Expr::Star(L('b'))));
  EXPECT_EQ(Parse("a|bc"), Expr::Union(L('a'), Expr::Concat(L('b'), L('c'))));
  EXPECT_EQ(Parse("a|b|c"),
            Expr::Union(Expr::Union(L('a'), L('b')), L('c')));
  EXPECT_EQ(Parse("abc"), Expr::Concat(Expr::Concat(L('a'), L('b')), L('c')));
  EXPECT_EQ(Parse("a*?+"), Expr::Plus(Expr::Opt(Expr::Star(L('a')))));
}

TEST(ParseTest, EscapedMetacharactersAreLetters) {
  EXPECT_EQ(Parse("\\(\\*"), Expr::Concat(L('('), L('*')));
  EXPECT_EQ(Parse("\\\\"), L('\\'));
  EXPECT_EQ(Parse("\\;"), L(';'));
}

TEST(ParseTest, OtherBytesAreLetters) {
  EXPECT_EQ(Parse(" "), L(' '));
  EXPECT_EQ(Parse(std::string("\xff\x00", 2)),
            Expr::Concat(Expr::Letter(0xff), Expr::Letter(0)));
}

TEST(ParseTest, ErrorOffsets) {
  EXPECT_EQ(ErrorOffset(""), 0u);
  EXPECT_EQ(ErrorOffset("a|"), 2u);
  EXPECT_EQ(ErrorOffset("("), 1u);
  EXPECT_EQ(ErrorOffset("(a"), 2u);
  EXPECT_EQ(ErrorOffset("a)"), 1u);
  EXPECT_EQ(ErrorOffset(")"), 0u);
  EXPECT_EQ(ErrorOffset("()"), 1u);
  EXPECT_EQ(ErrorOffset("*a"), 0u);
  EXPECT_EQ(ErrorOffset("a|*"), 2u);
  EXPECT_EQ(ErrorOffset("|a"), 0u);
  EXPECT_EQ(ErrorOffset("a;"), 2u);
  EXPECT_EQ(ErrorOffset("a;;b"), 2u);
  EXPECT_EQ(ErrorOffset("ab\\"), 2u);
  EXPECT_EQ(ErrorOffset("\\n"), 0u);
}

TEST(ParseTest, ErrorMessageCarriesOffset) {
  try {
    Parse("a|");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(std::string(e.what()),
              "syntax error at offset 2: expected an expression");
  }
}

TEST(ParseTest, GroupDepthLimit) {
  const std::string deep = std::string(50, '(') + "a" + std::string(50, ')');
  EXPECT_NO_THROW(Parse(deep));
  EXPECT_EQ(ErrorOffset(std::string(1001, '(') + "a" + std::string(1001, ')')),
            1000u);
  ParseOptions tight;
  tight.max_group_depth = 10;
  EXPECT_THROW(Parse(deep, tight), SyntaxError);
}

TEST(ParseTest, LongPostfixChainsStayOffTheStack) {
  const std::string pattern = "a" + std::string(200000, '*');
  const Expr e = Parse(pattern);
  EXPECT_EQ(e.node_count(), 200001u);
  EXPECT_EQ(Render(e), pattern);
}

TEST(MarkTest, RunningExamplePositions) {
  const MarkedExpr m = Mark(Parse("(ab|b)*ba"));
  ASSERT_EQ(m.size(), 5);
  EXPECT_EQ(std::string({static_cast<char>(m.letter(1)),
                         static_cast<char>(m.letter(2)),
                         static_cast<char>(m.letter(3)),
                         static_cast<char>(m.letter(4)),
                         static_cast<char>(m.letter(5))}),
            "abbba");
  EXPECT_EQ(RenderMarked(m), "(a1b2|b3)*b4a5");
}

TEST(MarkTest, SingleLetter) {
  const MarkedExpr m = Mark(L('a'));
  EXPECT_EQ(m.size(), 1);
  EXPECT_EQ(m.position(m.expr().root()), 1u);
}

TEST(MarkTest, LeftToRight) {
  const MarkedExpr m = Mark(Expr::Concat(L('a'), L('a')));
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(RenderMarked(m), "a1a2");
}

TEST(MarkTest, NumberingIgnoresArenaLayout) {
  // Right operand built first.
  ExprBuilder b;
  NodeId right = b.Letter('y');
  NodeId left = b.Letter('x');
  b.Binary(ExprKind::kConcat, left, right);
  const MarkedExpr m = Mark(std::move(b).Build());
  EXPECT_EQ(m.letter(1), 'x');
  EXPECT_EQ(m.letter(2), 'y');
}

TEST(ExprBuilderTest, RejectsForests) {
  ExprBuilder b;
  b.Letter('a');
  b.Letter('b');
  EXPECT_THROW(std::move(b).Build(), std::logic_error);
  EXPECT_THROW(ExprBuilder().Build(), std::logic_error);
}

TEST(ExprBuilderTest, RejectsSharedOperands) {
  ExprBuilder b;
  NodeId a = b.Letter('a');
  b.Binary(ExprKind::kConcat, a, a);
  EXPECT_THROW(std::move(b).Build(), std::logic_error);
}

TEST(RenderTest, Canonical) {
  EXPECT_EQ(Render(Parse("(((a;b)|b)*);b;a")), "(ab|b)*ba");
  EXPECT_EQ(Render(Parse("a|(b|c)")), "a|(b|c)");
  EXPECT_EQ(Render(Parse("(a|b)|c")), "a|b|c");
  EXPECT_EQ(Render(Parse("a(bc)")), "a(bc)");
  EXPECT_EQ(Render(Parse("(a?)(a?)aa")), "a?a?aa");
  EXPECT_EQ(Render(Parse("\\|\\\\")), "\\|\\\\");
}

// Property: every expression survives render -> parse, and marking is a
// bijection onto 1..m in left-to-right order.
TEST(ExprPropertyTest, RenderParseRoundTripAndMarking) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const Expr e = testing::RandomExpr(rng, 10, "ab()*+?|;\\ x");
    const std::string text = Render(e);
    ASSERT_EQ(Parse(text), e) << text;

    const MarkedExpr m = Mark(e);
    ASSERT_EQ(m.size(), e.letter_count());
    std::vector<int> seen(m.size() + 1, 0);
    for (NodeId id = 0; id < static_cast<NodeId>(e.node_count()); ++id) {
      const uint32_t p = m.position(id);
      if (e.node(id).kind == ExprKind::kLetter) {
        ASSERT_GE(p, 1u);
        ASSERT_LE(p, static_cast<uint32_t>(m.size()));
        ++seen[p];
      } else {
        ASSERT_EQ(p, 0u);
      }
    }
    for (int p = 1; p <= m.size(); ++p) ASSERT_EQ(seen[p], 1);
  }
}

// Property: parsing arbitrary bytes either succeeds or reports an offset
// within the input.
TEST(ExprPropertyTest, ParseIsTotal) {
  std::mt19937_64 rng(11);
  const std::string bytes("ab()*+?|;\\\0\xff", 12);
  for (int i = 0; i < 20000; ++i) {
    std::string s(rng() % 12, '\0');
    for (char& c : s) c = bytes[rng() % bytes.size()];
    try {
      const Expr e = Parse(s);
      EXPECT_EQ(Parse(Render(e)), e);
    } catch (const SyntaxError& err) {
      EXPECT_LE(err.offset(), s.size()) << s;
    }
  }
}

}  // namespace
}  // namespace seqcirc
