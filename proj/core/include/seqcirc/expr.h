#ifndef SEQCIRC_EXPR_H_
#define SEQCIRC_EXPR_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace seqcirc {

enum class ExprKind : uint8_t {
  kLetter,
  kUnion,
  kConcat,
  kStar,  // zero-or-more
  kPlus,  // one-or-more
  kOpt,   // zero-or-one
};

bool IsUnary(ExprKind kind);
bool IsBinary(ExprKind kind);

using NodeId = int32_t;
inline constexpr NodeId kNoNode = -1;

struct ExprNode {
  ExprKind kind = ExprKind::kLetter;
  uint8_t symbol = 0;       // meaningful for kLetter only
  NodeId left = kNoNode;    // binary left operand, or the unary operand
  NodeId right = kNoNode;   // binary right operand

  NodeId operand() const { return left; }
};

// Abstract syntax tree of a regular expression over byte letters.
//
// Nodes live in a flat arena where every child precedes its parent, so the
// root is always the last node. This lets analyses run as plain loops (bottom
// up in index order, top down in reverse order) and keeps arbitrarily deep
// trees away from the call stack.
class Expr {
 public:
  static Expr Letter(uint8_t symbol);
  static Expr Union(const Expr& left, const Expr& right);
  static Expr Concat(const Expr& left, const Expr& right);
  static Expr Star(const Expr& operand);
  static Expr Plus(const Expr& operand);
  static Expr Opt(const Expr& operand);

  NodeId root() const { return static_cast<NodeId>(nodes_.size()) - 1; }
  const ExprNode& node(NodeId id) const { return nodes_[id]; }
  const ExprNode& root_node() const { return nodes_.back(); }
  std::span<const ExprNode> nodes() const { return nodes_; }
  size_t node_count() const { return nodes_.size(); }

  // Number of letter occurrences.
  int letter_count() const;

  // Structural equality; independent of arena layout.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  friend class ExprBuilder;
  Expr() = default;

  std::vector<ExprNode> nodes_;
};

// Incremental arena construction. Operands must be added before the nodes
// that use them, and the last node added becomes the root.
class ExprBuilder {
 public:
  NodeId Letter(uint8_t symbol);
  NodeId Binary(ExprKind kind, NodeId left, NodeId right);
  NodeId Unary(ExprKind kind, NodeId operand);
  // Copies all nodes of `expr` and returns the id of its root.
  NodeId Append(const Expr& expr);

  size_t size() const { return nodes_.size(); }

  // Validates that the nodes form a single tree rooted at the last node.
  // Throws std::logic_error otherwise.
  Expr Build() &&;

 private:
  NodeId Push(const ExprNode& node);

  std::vector<ExprNode> nodes_;
};

// An expression whose letter occurrences carry unique positions 1..m,
// assigned left to right. Position 0 is reserved for the initial position.
class MarkedExpr {
 public:
  const Expr& expr() const { return expr_; }
  // m, the number of letter occurrences.
  int size() const { return static_cast<int>(position_nodes_.size()); }
  // Position of a letter node, 0 for operator nodes.
  uint32_t position(NodeId id) const { return positions_[id]; }
  NodeId node_of(uint32_t position) const {
    return position_nodes_[position - 1];
  }
  uint8_t letter(uint32_t position) const {
    return expr_.node(node_of(position)).symbol;
  }

 private:
  friend MarkedExpr Mark(Expr expr);
  explicit MarkedExpr(Expr expr) : expr_(std::move(expr)) {}

  Expr expr_;
  std::vector<uint32_t> positions_;     // indexed by NodeId
  std::vector<NodeId> position_nodes_;  // indexed by position - 1
};

MarkedExpr Mark(Expr expr);

// Canonical surface syntax. Parse(Render(e)) == e for every expression.
std::string Render(const Expr& expr);

// Human-readable form of the subtree at `id`, with each letter followed by
// its position, e.g. "(a1b2|b3)*b4a5".
std::string RenderMarked(const MarkedExpr& marked, NodeId id);
inline std::string RenderMarked(const MarkedExpr& marked) {
  return RenderMarked(marked, marked.expr().root());
}

// Printable rendering of a single letter byte: metacharacters are escaped
// with a backslash and non-printable bytes become \xHH.
std::string DisplayByte(uint8_t byte);

// True for the bytes that must be escaped to be used as letters.
bool IsMetaChar(uint8_t byte);

}  // namespace seqcirc

#endif  // SEQCIRC_EXPR_H_
