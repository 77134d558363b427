#include "seqcirc/expr.h"

#include <cstdio>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace seqcirc {

bool IsUnary(ExprKind kind) {
  return kind == ExprKind::kStar || kind == ExprKind::kPlus ||
         kind == ExprKind::kOpt;
}

bool IsBinary(ExprKind kind) {
  return kind == ExprKind::kUnion || kind == ExprKind::kConcat;
}

bool IsMetaChar(uint8_t byte) {
  switch (byte) {
    case '(':
    case ')':
    case '*':
    case '+':
    case '?':
    case '|':
    case ';':
    case '\\':
      return true;
    default:
      return false;
  }
}

std::string DisplayByte(uint8_t byte) {
  if (IsMetaChar(byte)) return std::string{'\\', static_cast<char>(byte)};
  if (byte > 0x20 && byte < 0x7f) return std::string(1, static_cast<char>(byte));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "\\x%02X", byte);
  return buf;
}

// ---------------------------------------------------------------------------
// Construction

NodeId ExprBuilder::Push(const ExprNode& node) {
  nodes_.push_back(node);
  return static_cast<NodeId>(nodes_.size()) - 1;
}

NodeId ExprBuilder::Letter(uint8_t symbol) {
  return Push({ExprKind::kLetter, symbol, kNoNode, kNoNode});
}

NodeId ExprBuilder::Binary(ExprKind kind, NodeId left, NodeId right) {
  const auto n = static_cast<NodeId>(nodes_.size());
  if (!IsBinary(kind) || left < 0 || right < 0 || left >= n || right >= n) {
    throw std::logic_error("ExprBuilder::Binary: invalid operands");
  }
  return Push({kind, 0, left, right});
}

NodeId ExprBuilder::Unary(ExprKind kind, NodeId operand) {
  const auto n = static_cast<NodeId>(nodes_.size());
  if (!IsUnary(kind) || operand < 0 || operand >= n) {
    throw std::logic_error("ExprBuilder::Unary: invalid operand");
  }
  return Push({kind, 0, operand, kNoNode});
}

NodeId ExprBuilder::Append(const Expr& expr) {
  const auto offset = static_cast<NodeId>(nodes_.size());
  for (ExprNode node : expr.nodes()) {
    if (node.left != kNoNode) node.left += offset;
    if (node.right != kNoNode) node.right += offset;
    nodes_.push_back(node);
  }
  return static_cast<NodeId>(nodes_.size()) - 1;
}

Expr ExprBuilder::Build() && {
  if (nodes_.empty()) throw std::logic_error("ExprBuilder: empty expression");
  std::vector<uint8_t> parents(nodes_.size(), 0);
  for (const ExprNode& node : nodes_) {
    if (node.left != kNoNode) ++parents[node.left];
    if (node.right != kNoNode) ++parents[node.right];
  }
  for (size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (parents[i] != 1) {
      throw std::logic_error("ExprBuilder: nodes do not form a single tree");
    }
  }
  if (parents.back() != 0) throw std::logic_error("ExprBuilder: cyclic root");
  Expr expr;
  expr.nodes_ = std::move(nodes_);
  return expr;
}

Expr Expr::Letter(uint8_t symbol) {
  ExprBuilder b;
  b.Letter(symbol);
  return std::move(b).Build();
}

namespace {

Expr MakeBinary(ExprKind kind, const Expr& left, const Expr& right) {
  ExprBuilder b;
  NodeId l = b.Append(left);
  NodeId r = b.Append(right);
  b.Binary(kind, l, r);
  return std::move(b).Build();
}

Expr MakeUnary(ExprKind kind, const Expr& operand) {
  ExprBuilder b;
  b.Unary(kind, b.Append(operand));
  return std::move(b).Build();
}

}  // namespace

Expr Expr::Union(const Expr& left, const Expr& right) {
  return MakeBinary(ExprKind::kUnion, left, right);
}
Expr Expr::Concat(const Expr& left, const Expr& right) {
  return MakeBinary(ExprKind::kConcat, left, right);
}
Expr Expr::Star(const Expr& operand) {
  return MakeUnary(ExprKind::kStar, operand);
}
Expr Expr::Plus(const Expr& operand) {
  return MakeUnary(ExprKind::kPlus, operand);
}
Expr Expr::Opt(const Expr& operand) {
  return MakeUnary(ExprKind::kOpt, operand);
}

int Expr::letter_count() const {
  int count = 0;
  for (const ExprNode& node : nodes_) {
    if (node.kind == ExprKind::kLetter) ++count;
  }
  return count;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_count() != b.node_count()) return false;
  std::vector<std::pair<NodeId, NodeId>> stack = {{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const ExprNode& nx = a.node(x);
    const ExprNode& ny = b.node(y);
    if (nx.kind != ny.kind) return false;
    if (nx.kind == ExprKind::kLetter) {
      if (nx.symbol != ny.symbol) return false;
      continue;
    }
    stack.emplace_back(nx.left, ny.left);
    if (IsBinary(nx.kind)) stack.emplace_back(nx.right, ny.right);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Marking

MarkedExpr Mark(Expr expr) {
  MarkedExpr marked(std::move(expr));
  const Expr& e = marked.expr_;
  marked.positions_.assign(e.node_count(), 0);
  std::vector<NodeId> stack = {e.root()};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const ExprNode& node = e.node(id);
    if (node.kind == ExprKind::kLetter) {
      marked.position_nodes_.push_back(id);
      marked.positions_[id] =
          static_cast<uint32_t>(marked.position_nodes_.size());
      continue;
    }
    if (IsBinary(node.kind)) stack.push_back(node.right);
    stack.push_back(node.left);
  }
  return marked;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

int Precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::kUnion:
      return 0;
    case ExprKind::kConcat:
      return 1;
    case ExprKind::kLetter:
      return 3;
    default:
      return 2;
  }
}

char PostfixChar(ExprKind kind) {
  switch (kind) {
    case ExprKind::kStar:
      return '*';
    case ExprKind::kPlus:
      return '+';
    default:
      return '?';
  }
}

template <typename LetterFn>
std::string RenderTree(const Expr& expr, NodeId root, LetterFn&& letter) {
  // Either a node to render or a literal to emit.
  struct Item {
    NodeId id;
    bool parens;
    std::string_view text;
  };
  std::string out;
  std::vector<Item> stack = {{root, false, {}}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.id == kNoNode) {
      out += item.text;
      continue;
    }
    const ExprNode& node = expr.node(item.id);
    if (item.parens) {
      out += '(';
      stack.push_back({kNoNode, false, ")"});
    }
    const int prec = Precedence(node.kind);
    switch (node.kind) {
      case ExprKind::kLetter:
        out += letter(item.id, node.symbol);
        break;
      case ExprKind::kUnion:
        // Left-associative: only a right-hand union needs grouping.
        stack.push_back(
            {node.right, Precedence(expr.node(node.right).kind) <= prec, {}});
        stack.push_back({kNoNode, false, "|"});
        stack.push_back(
            {node.left, Precedence(expr.node(node.left).kind) < prec, {}});
        break;
      case ExprKind::kConcat:
        stack.push_back(
            {node.right, Precedence(expr.node(node.right).kind) <= prec, {}});
        stack.push_back(
            {node.left, Precedence(expr.node(node.left).kind) < prec, {}});
        break;
      default: {
        static constexpr std::string_view kPostfix = "*+?";
        const char op = PostfixChar(node.kind);
        stack.push_back(
            {kNoNode, false, kPostfix.substr(kPostfix.find(op), 1)});
        stack.push_back(
            {node.left, Precedence(expr.node(node.left).kind) < prec, {}});
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string Render(const Expr& expr) {
  return RenderTree(expr, expr.root(), [](NodeId, uint8_t symbol) {
    std::string s;
    if (IsMetaChar(symbol)) s += '\\';
    s += static_cast<char>(symbol);
    return s;
  });
}

std::string RenderMarked(const MarkedExpr& marked, NodeId id) {
  return RenderTree(marked.expr(), id, [&](NodeId leaf, uint8_t symbol) {
    return DisplayByte(symbol) + std::to_string(marked.position(leaf));
  });
}

}  // namespace seqcirc
