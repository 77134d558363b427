#include "seqcirc/matcher.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace seqcirc {

const char* MatchModeName(MatchMode mode) {
  switch (mode) {
    case MatchMode::kFullMatch:
      return "full";
    case MatchMode::kSuffixAtEnd:
      return "suffix";
    case MatchMode::kContainsAnywhere:
      return "anywhere";
  }
  return "?";
}

StartMode RequiredStartMode(MatchMode mode) {
  return mode == MatchMode::kFullMatch ? StartMode::kAnchored
                                       : StartMode::kAnywhere;
}

namespace {

// Computes next = F(prev, byte) over packed words and returns the output bit.
bool Advance(const Circuit& c, const uint64_t* prev, uint64_t* next,
             uint8_t byte) {
  const size_t words = c.word_count();
  std::fill(next, next + words, 0);
  if (c.start_mode() == StartMode::kAnywhere) next[0] = 1;
  const uint32_t end = c.letter_end(byte);
  for (uint32_t e = c.letter_begin(byte); e < end; ++e) {
    const uint64_t* mask = c.entry_mask(e);
    for (size_t w = 0; w < words; ++w) {
      if (mask[w] & prev[w]) {
        const uint32_t i = c.entry_position(e);
        next[i / StateVector::kWordBits] |= uint64_t{1}
                                            << (i % StateVector::kWordBits);
        break;
      }
    }
  }
  const auto accept = c.accept_mask();
  for (size_t w = 0; w < words; ++w) {
    if (next[w] & accept[w]) return true;
  }
  return false;
}

}  // namespace

StepOutput Step(const Circuit& circuit, const StateVector& state,
                uint8_t input) {
  if (state.size() != circuit.state_bits()) {
    throw std::invalid_argument("state vector has " +
                                std::to_string(state.size()) +
                                " bits; circuit expects " +
                                std::to_string(circuit.state_bits()));
  }
  StepOutput out{StateVector(circuit.state_bits()), false};
  out.output = Advance(circuit, state.words().data(), out.next.words().data(),
                       input);
  return out;
}

StreamMatcher::StreamMatcher(const Circuit& circuit, MatchMode mode)
    : circuit_(&circuit), mode_(mode) {
  if (circuit.start_mode() != RequiredStartMode(mode)) {
    throw std::invalid_argument(
        std::string("match mode '") + MatchModeName(mode) +
        "' needs a circuit built with start mode '" +
        StartModeName(RequiredStartMode(mode)) + "', got '" +
        StartModeName(circuit.start_mode()) + "'");
  }
  state_.assign(circuit.word_count(), 0);
  state_[0] = 1;
  next_.assign(state_.size(), 0);
  last_output_ = circuit.skippable();
  if (last_output_) first_accept_ = 0;
}

void StreamMatcher::Feed(std::string_view chunk) {
  Feed(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(chunk.data()), chunk.size()));
}

void StreamMatcher::Feed(std::span<const uint8_t> chunk) {
  if (chunk.empty()) return;
  if (!circuit_->has_tables()) {
    FeedImpl<Path::kPositions>(chunk.data(), chunk.size());
  } else if (circuit_->word_count() == 1) {
    FeedImpl<Path::kSingleWord>(chunk.data(), chunk.size());
  } else {
    FeedImpl<Path::kTables>(chunk.data(), chunk.size());
  }
}

template <StreamMatcher::Path kPath>
void StreamMatcher::FeedImpl(const uint8_t* data, size_t size) {
  const Circuit& c = *circuit_;
  const size_t words = c.word_count();
  const size_t chunks = c.chunk_count();
  const uint64_t start = c.start_mode() == StartMode::kAnywhere ? 1 : 0;
  const auto accept = c.accept_mask();
  bool output = last_output_;
  bool found = first_accept_.has_value();
  uint64_t first = found ? *first_accept_ : 0;
  uint64_t v = state_[0];  // kSingleWord only

  for (size_t k = 0; k < size; ++k) {
    if constexpr (kPath == Path::kSingleWord) {
      const uint64_t letter = *c.letter_mask(data[k]);
      uint64_t reach = 0;
      if (letter != 0) {
        for (size_t chunk = 0; chunk < chunks; ++chunk) {
          reach |= *c.activation(chunk, (v >> (8 * chunk)) & 0xff);
        }
      }
      v = start | (reach & letter);
      output = (v & accept[0]) != 0;
    } else if constexpr (kPath == Path::kTables) {
      const uint8_t byte = data[k];
      const uint64_t* letter = c.letter_mask(byte);
      uint64_t* next = next_.data();
      std::fill(next, next + words, 0);
      const size_t live_chunks =
          c.letter_begin(byte) == c.letter_end(byte) ? 0 : chunks;
      for (size_t chunk = 0; chunk < live_chunks; ++chunk) {
        const uint8_t bits = static_cast<uint8_t>(
            state_[chunk / 8] >> (8 * (chunk % 8)));
        if (bits == 0) continue;
        const uint64_t* row = c.activation(chunk, bits);
        for (size_t w = 0; w < words; ++w) next[w] |= row[w];
      }
      output = false;
      for (size_t w = 0; w < words; ++w) {
        next[w] &= letter[w];
        output |= (next[w] & accept[w]) != 0;
      }
      next[0] |= start;
      output |= (start & accept[0]) != 0;
      state_.swap(next_);
    } else {
      output = Advance(c, state_.data(), next_.data(), data[k]);
      state_.swap(next_);
    }
    if (output && !found) {
      found = true;
      first = steps_ + k + 1;
    }
  }

  if constexpr (kPath == Path::kSingleWord) state_[0] = v;
  steps_ += size;
  last_output_ = output;
  if (found) first_accept_ = first;
}

MatchResult StreamMatcher::result() const {
  MatchResult r;
  r.steps = steps_;
  r.first_accept_step = first_accept_;
  r.accepted = mode_ == MatchMode::kContainsAnywhere ? first_accept_.has_value()
                                                     : last_output_;
  return r;
}

StateVector StreamMatcher::state() const {
  StateVector v(circuit_->state_bits());
  std::copy(state_.begin(), state_.end(), v.words().begin());
  return v;
}

MatchResult Run(const Circuit& circuit, std::string_view input,
                MatchMode mode) {
  StreamMatcher m(circuit, mode);
  m.Feed(input);
  return m.result();
}

MatchResult RunStreaming(const Circuit& circuit,
                         std::span<const std::string_view> chunks,
                         MatchMode mode) {
  StreamMatcher m(circuit, mode);
  for (std::string_view chunk : chunks) m.Feed(chunk);
  return m.result();
}

}  // namespace seqcirc
