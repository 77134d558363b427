#ifndef SEQCIRC_ANALYSIS_H_
#define SEQCIRC_ANALYSIS_H_

#include <cstdint>
#include <vector>

#include "seqcirc/expr.h"
#include "seqcirc/position_set.h"

namespace seqcirc {

// Position `position` (reading `letter`) becomes active when the previous
// step had any member of `trigger_set` active.
struct Trigger {
  uint32_t position = 0;
  uint8_t letter = 0;
  PositionSet trigger_set;

  friend bool operator==(const Trigger&, const Trigger&) = default;
};

// Per-node skippability (empty word in the language) and outputting (last)
// positions, computed in one bottom-up pass over a marked expression.
class PositionAnalysis {
 public:
  explicit PositionAnalysis(const MarkedExpr& marked);

  bool eps(NodeId id) const { return eps_[id] != 0; }
  const PositionSet& outs(NodeId id) const { return outs_[id]; }

  bool root_eps() const { return eps(marked_->expr().root()); }
  const PositionSet& root_outs() const { return outs(marked_->expr().root()); }

  // Trigger sets for every letter position when the whole expression is
  // entered from `incoming`. Sorted by position; entry k describes position
  // k + 1.
  std::vector<Trigger> Trigs(const PositionSet& incoming) const;

 private:
  const MarkedExpr* marked_;
  std::vector<uint8_t> eps_;
  std::vector<PositionSet> outs_;
};

bool Eps(const MarkedExpr& marked);
PositionSet Outs(const MarkedExpr& marked);
std::vector<Trigger> Trigs(const MarkedExpr& marked,
                           const PositionSet& incoming);

}  // namespace seqcirc

#endif  // SEQCIRC_ANALYSIS_H_
