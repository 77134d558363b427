#ifndef SEQCIRC_MATCHER_H_
#define SEQCIRC_MATCHER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "seqcirc/circuit.h"

namespace seqcirc {

enum class MatchMode {
  kFullMatch,         // anchored; output after the last byte
  kSuffixAtEnd,       // anywhere; output after the last byte
  kContainsAnywhere,  // anywhere; output latched once it fires
};

const char* MatchModeName(MatchMode mode);
// The start mode a circuit must be built with to run under `mode`.
StartMode RequiredStartMode(MatchMode mode);

struct MatchResult {
  bool accepted = false;
  uint64_t steps = 0;
  // Earliest step n whose output was 1. Step 0 is the empty prefix, which
  // outputs 1 only for skippable expressions.
  std::optional<uint64_t> first_accept_step;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

struct StepOutput {
  StateVector next;
  bool output = false;
};

// One clock tick: Vn(i) = Fi(Vn-1, X) for every i, and the output of Vn.
StepOutput Step(const Circuit& circuit, const StateVector& state,
                uint8_t input);

// Incremental matcher. Feeding chunks c1, c2, ... gives the same result as
// Run() on their concatenation. Holds a reference to the circuit.
class StreamMatcher {
 public:
  // Throws std::invalid_argument when the circuit's start mode does not
  // suit `mode`.
  StreamMatcher(const Circuit& circuit, MatchMode mode);

  void Feed(std::string_view chunk);
  void Feed(std::span<const uint8_t> chunk);

  MatchResult result() const;
  const std::vector<uint64_t>& state_words() const { return state_; }
  StateVector state() const;

 private:
  enum class Path { kSingleWord, kTables, kPositions };
  template <Path kPath>
  void FeedImpl(const uint8_t* data, size_t size);

  const Circuit* circuit_;
  MatchMode mode_;
  std::vector<uint64_t> state_;
  std::vector<uint64_t> next_;
  uint64_t steps_ = 0;
  bool last_output_ = false;
  std::optional<uint64_t> first_accept_;
};

MatchResult Run(const Circuit& circuit, std::string_view input,
                MatchMode mode);
MatchResult RunStreaming(const Circuit& circuit,
                         std::span<const std::string_view> chunks,
                         MatchMode mode);

}  // namespace seqcirc

#endif  // SEQCIRC_MATCHER_H_
