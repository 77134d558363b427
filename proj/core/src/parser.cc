#include "seqcirc/parser.h"

#include <cstdint>
#include <utility>

namespace seqcirc {

SyntaxError::SyntaxError(size_t offset, const std::string& what)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": " + what),
      offset_(offset),
      reason_(what) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options) {}

  Expr Run() {
    if (text_.empty()) throw SyntaxError(0, "empty pattern");
    ParseUnion();
    if (!AtEnd()) {
      // ParseUnion only stops early on ')'.
      throw SyntaxError(pos_, "unbalanced ')'");
    }
    return std::move(builder_).Build();
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  NodeId ParseUnion() {
    NodeId left = ParseConcat();
    while (!AtEnd() && Peek() == '|') {
      ++pos_;
      NodeId right = ParseConcat();
      left = builder_.Binary(ExprKind::kUnion, left, right);
    }
    return left;
  }

  NodeId ParseConcat() {
    NodeId left = ParsePostfix();
    while (!AtEnd()) {
      const char c = Peek();
      if (c == '|' || c == ')') break;
      if (c == ';') ++pos_;
      NodeId right = ParsePostfix();
      left = builder_.Binary(ExprKind::kConcat, left, right);
    }
    return left;
  }

  NodeId ParsePostfix() {
    NodeId operand = ParseAtom();
    while (!AtEnd()) {
      ExprKind kind;
      switch (Peek()) {
        case '*':
          kind = ExprKind::kStar;
          break;
        case '+':
          kind = ExprKind::kPlus;
          break;
        case '?':
          kind = ExprKind::kOpt;
          break;
        default:
          return operand;
      }
      ++pos_;
      operand = builder_.Unary(kind, operand);
    }
    return operand;
  }

  NodeId ParseAtom() {
    if (AtEnd()) throw SyntaxError(pos_, "expected an expression");
    const size_t start = pos_;
    const char c = Peek();
    switch (c) {
      case '(': {
        if (++depth_ > options_.max_group_depth) {
          throw SyntaxError(start, "groups nested too deeply");
        }
        ++pos_;
        if (!AtEnd() && Peek() == ')') throw SyntaxError(pos_, "empty group");
        NodeId inner = ParseUnion();
        if (AtEnd()) throw SyntaxError(pos_, "missing ')' for group at offset " +
                                                 std::to_string(start));
        ++pos_;  // ')'
        --depth_;
        return inner;
      }
      case ')':
        throw SyntaxError(pos_, "unbalanced ')'");
      case '|':
        throw SyntaxError(pos_, "missing operand before '|'");
      case ';':
        throw SyntaxError(pos_, "missing operand before ';'");
      case '*':
      case '+':
      case '?':
        throw SyntaxError(pos_, std::string("dangling operator '") + c + "'");
      case '\\': {
        if (pos_ + 1 >= text_.size()) {
          throw SyntaxError(pos_, "trailing backslash");
        }
        const auto escaped = static_cast<uint8_t>(text_[pos_ + 1]);
        if (!IsMetaChar(escaped)) {
          throw SyntaxError(pos_, "invalid escape '\\" +
                                      DisplayByte(escaped) + "'");
        }
        pos_ += 2;
        return builder_.Letter(escaped);
      }
      default:
        ++pos_;
        return builder_.Letter(static_cast<uint8_t>(c));
    }
  }

  std::string_view text_;
  const ParseOptions& options_;
  size_t pos_ = 0;
  int depth_ = 0;
  ExprBuilder builder_;
};

}  // namespace

Expr Parse(std::string_view pattern, const ParseOptions& options) {
  return Parser(pattern, options).Run();
}

}  // namespace seqcirc
