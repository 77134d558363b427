#ifndef SEQCIRC_ORACLE_H_
#define SEQCIRC_ORACLE_H_

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "seqcirc/expr.h"
#include "seqcirc/matcher.h"

namespace seqcirc {

// Forward position automaton (first/last/follow sets) of a marked
// expression, built with the textbook forward rules. It deliberately shares
// nothing with the trigger-set analysis and serves as a reference matcher.
struct PositionAutomaton {
  int m = 0;
  std::vector<uint8_t> letter;  // indexed by position; [0] unused
  std::set<uint32_t> first;
  std::vector<std::set<uint32_t>> follow;  // indexed by position; [0] unused
  std::set<uint32_t> last;
  bool nullable = false;

  // Accepting states: the last positions, plus the initial position 0 when
  // the expression is nullable.
  bool IsFinal(uint32_t position) const {
    return position == 0 ? nullable : last.count(position) > 0;
  }
};

PositionAutomaton BuildOracle(const MarkedExpr& marked);

// Subset simulation. kFullMatch checks the whole word, kSuffixAtEnd any
// suffix (including the empty one), kContainsAnywhere any substring.
bool OracleMatch(const PositionAutomaton& automaton, std::string_view word,
                 MatchMode mode);
bool OracleMatch(const MarkedExpr& marked, std::string_view word,
                 MatchMode mode);

}  // namespace seqcirc

#endif  // SEQCIRC_ORACLE_H_
