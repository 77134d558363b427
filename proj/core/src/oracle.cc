#include "seqcirc/oracle.h"

namespace seqcirc {
namespace {

struct Summary {
  bool nullable;
  std::set<uint32_t> first;
  std::set<uint32_t> last;
};

void Link(PositionAutomaton& a, const std::set<uint32_t>& from,
          const std::set<uint32_t>& to) {
  for (uint32_t p : from) a.follow[p].insert(to.begin(), to.end());
}

Summary Visit(const MarkedExpr& marked, NodeId id, PositionAutomaton& a) {
  const ExprNode& node = marked.expr().node(id);
  switch (node.kind) {
    case ExprKind::kLetter: {
      const uint32_t p = marked.position(id);
      a.letter[p] = node.symbol;
      return {false, {p}, {p}};
    }
    case ExprKind::kUnion: {
      Summary l = Visit(marked, node.left, a);
      Summary r = Visit(marked, node.right, a);
      l.first.insert(r.first.begin(), r.first.end());
      l.last.insert(r.last.begin(), r.last.end());
      return {l.nullable || r.nullable, std::move(l.first), std::move(l.last)};
    }
    case ExprKind::kConcat: {
      Summary l = Visit(marked, node.left, a);
      Summary r = Visit(marked, node.right, a);
      Link(a, l.last, r.first);
      Summary s{l.nullable && r.nullable, l.first, r.last};
      if (l.nullable) s.first.insert(r.first.begin(), r.first.end());
      if (r.nullable) s.last.insert(l.last.begin(), l.last.end());
      return s;
    }
    case ExprKind::kStar:
    case ExprKind::kPlus: {
      Summary s = Visit(marked, node.left, a);
      Link(a, s.last, s.first);
      if (node.kind == ExprKind::kStar) s.nullable = true;
      return s;
    }
    case ExprKind::kOpt: {
      Summary s = Visit(marked, node.left, a);
      s.nullable = true;
      return s;
    }
  }
  return {};
}

bool Accepts(const PositionAutomaton& a, std::string_view word) {
  std::set<uint32_t> active = {0};
  for (char c : word) {
    const auto byte = static_cast<uint8_t>(c);
    std::set<uint32_t> next;
    for (uint32_t p : active) {
      const std::set<uint32_t>& successors = p == 0 ? a.first : a.follow[p];
      for (uint32_t q : successors) {
        if (a.letter[q] == byte) next.insert(q);
      }
    }
    if (next.empty()) return false;
    active = std::move(next);
  }
  for (uint32_t p : active) {
    if (a.IsFinal(p)) return true;
  }
  return false;
}

}  // namespace

PositionAutomaton BuildOracle(const MarkedExpr& marked) {
  PositionAutomaton a;
  a.m = marked.size();
  a.letter.assign(a.m + 1, 0);
  a.follow.assign(a.m + 1, {});
  Summary root = Visit(marked, marked.expr().root(), a);
  a.first = std::move(root.first);
  a.last = std::move(root.last);
  a.nullable = root.nullable;
  return a;
}

bool OracleMatch(const PositionAutomaton& automaton, std::string_view word,
                 MatchMode mode) {
  switch (mode) {
    case MatchMode::kFullMatch:
      return Accepts(automaton, word);
    case MatchMode::kSuffixAtEnd:
      for (size_t start = 0; start <= word.size(); ++start) {
        if (Accepts(automaton, word.substr(start))) return true;
      }
      return false;
    case MatchMode::kContainsAnywhere:
      for (size_t start = 0; start <= word.size(); ++start) {
        for (size_t len = 0; start + len <= word.size(); ++len) {
          if (Accepts(automaton, word.substr(start, len))) return true;
        }
      }
      return false;
  }
  return false;
}

bool OracleMatch(const MarkedExpr& marked, std::string_view word,
                 MatchMode mode) {
  return OracleMatch(BuildOracle(marked), word, mode);
}

}  // namespace seqcirc
