#include "seqcirc/analysis.h"

#include <utility>

namespace seqcirc {

PositionAnalysis::PositionAnalysis(const MarkedExpr& marked)
    : marked_(&marked),
      eps_(marked.expr().node_count(), 0),
      outs_(marked.expr().node_count()) {
  const Expr& expr = marked.expr();
  // Operands precede their parents in the arena, so index order is bottom-up.
  for (NodeId id = 0; id < static_cast<NodeId>(expr.node_count()); ++id) {
    const ExprNode& node = expr.node(id);
    switch (node.kind) {
      case ExprKind::kLetter:
        eps_[id] = 0;
        outs_[id] = PositionSet{marked.position(id)};
        break;
      case ExprKind::kUnion:
        eps_[id] = eps_[node.left] | eps_[node.right];
        outs_[id] = outs_[node.left] | outs_[node.right];
        break;
      case ExprKind::kConcat:
        eps_[id] = eps_[node.left] & eps_[node.right];
        outs_[id] = eps_[node.right] ? outs_[node.left] | outs_[node.right]
                                     : outs_[node.right];
        break;
      case ExprKind::kStar:
        eps_[id] = 1;
        outs_[id] = outs_[node.left];
        break;
      case ExprKind::kPlus:
        eps_[id] = eps_[node.left];
        outs_[id] = outs_[node.left];
        break;
      case ExprKind::kOpt:
        eps_[id] = 1;
        outs_[id] = outs_[node.left];
        break;
    }
  }
}

std::vector<Trigger> PositionAnalysis::Trigs(
    const PositionSet& incoming) const {
  const Expr& expr = marked_->expr();
  std::vector<Trigger> triggers(static_cast<size_t>(marked_->size()));
  // Incoming set per node, filled top-down and released once consumed.
  std::vector<PositionSet> in(expr.node_count());
  in[expr.root()] = incoming;
  for (NodeId id = expr.root(); id >= 0; --id) {
    const ExprNode& node = expr.node(id);
    PositionSet h = std::move(in[id]);
    switch (node.kind) {
      case ExprKind::kLetter: {
        const uint32_t position = marked_->position(id);
        triggers[position - 1] = {position, node.symbol, std::move(h)};
        break;
      }
      case ExprKind::kUnion:
        in[node.left] = h;
        in[node.right] = std::move(h);
        break;
      case ExprKind::kConcat:
        in[node.right] = eps_[node.left] ? outs_[node.left] | h
                                         : outs_[node.left];
        in[node.left] = std::move(h);
        break;
      case ExprKind::kStar:
      case ExprKind::kPlus:
        in[node.left] = outs_[node.left] | h;
        break;
      case ExprKind::kOpt:
        in[node.left] = std::move(h);
        break;
    }
  }
  return triggers;
}

bool Eps(const MarkedExpr& marked) {
  return PositionAnalysis(marked).root_eps();
}

PositionSet Outs(const MarkedExpr& marked) {
  return PositionAnalysis(marked).root_outs();
}

std::vector<Trigger> Trigs(const MarkedExpr& marked,
                           const PositionSet& incoming) {
  return PositionAnalysis(marked).Trigs(incoming);
}

}  // namespace seqcirc
