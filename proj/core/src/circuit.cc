#include "seqcirc/circuit.h"

#include <algorithm>
#include <bit>

namespace seqcirc {

const char* StartModeName(StartMode mode) {
  return mode == StartMode::kAnchored ? "anchored" : "anywhere";
}

StateVector StateVector::FromBits(std::initializer_list<int> bits) {
  StateVector v(bits.size());
  size_t i = 0;
  for (int bit : bits) v.Set(i++, bit != 0);
  return v;
}

void StateVector::Set(size_t i, bool value) {
  const uint64_t mask = uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void StateVector::Reset() { std::fill(words_.begin(), words_.end(), 0); }

bool StateVector::None() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

std::string StateVector::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < bits_; ++i) {
    if (i > 0) out += ',';
    out += Get(i) ? '1' : '0';
  }
  out += ')';
  return out;
}

Circuit Circuit::Build(const MarkedExpr& marked, StartMode mode,
                       const BuildOptions& options) {
  if (marked.size() > options.max_positions) {
    throw CircuitError("expression has " + std::to_string(marked.size()) +
                       " letter occurrences; the limit is " +
                       std::to_string(options.max_positions));
  }
  PositionAnalysis analysis(marked);

  Circuit c;
  c.triggers_ = analysis.Trigs(PositionSet{0});
  c.output_set_ = analysis.root_outs();
  c.start_mode_ = mode;
  c.skippable_ = analysis.root_eps();

  const size_t bits = c.state_bits();
  c.word_count_ = (bits + StateVector::kWordBits - 1) / StateVector::kWordBits;

  // Group positions by letter with a counting sort; positions stay ascending
  // within each letter.
  std::array<uint32_t, 256> counts{};
  for (const Trigger& t : c.triggers_) ++counts[t.letter];
  c.letter_offsets_[0] = 0;
  for (size_t b = 0; b < 256; ++b) {
    c.letter_offsets_[b + 1] = c.letter_offsets_[b] + counts[b];
  }
  const size_t entries = c.triggers_.size();
  c.entry_positions_.resize(entries);
  c.entry_masks_.assign(entries * c.word_count_, 0);
  std::array<uint32_t, 256> next{};
  std::copy(c.letter_offsets_.begin(), c.letter_offsets_.end() - 1,
            next.begin());
  for (const Trigger& t : c.triggers_) {
    const uint32_t e = next[t.letter]++;
    c.entry_positions_[e] = t.position;
    uint64_t* mask = c.entry_masks_.data() + size_t{e} * c.word_count_;
    for (uint32_t j : t.trigger_set) {
      mask[j / StateVector::kWordBits] |= uint64_t{1}
                                          << (j % StateVector::kWordBits);
    }
  }

  c.accept_mask_.assign(c.word_count_, 0);
  for (uint32_t i : c.output_set_) {
    c.accept_mask_[i / StateVector::kWordBits] |=
        uint64_t{1} << (i % StateVector::kWordBits);
  }
  if (c.skippable_) c.accept_mask_[0] |= 1;

  const size_t words = c.word_count_;
  const size_t chunks = c.chunk_count();
  const size_t table_bytes = (chunks + 1) * 256 * words * sizeof(uint64_t);
  if (table_bytes <= options.max_table_bytes) {
    auto set_bit = [](uint64_t* row, uint32_t i) {
      row[i / StateVector::kWordBits] |= uint64_t{1}
                                         << (i % StateVector::kWordBits);
    };
    // activates[j]: positions whose trigger set contains j.
    std::vector<uint64_t> activates(bits * words, 0);
    c.letter_masks_.assign(256 * words, 0);
    for (const Trigger& t : c.triggers_) {
      set_bit(c.letter_masks_.data() + size_t{t.letter} * words, t.position);
      for (uint32_t j : t.trigger_set) {
        set_bit(activates.data() + size_t{j} * words, t.position);
      }
    }
    c.activation_.assign(chunks * 256 * words, 0);
    for (size_t k = 0; k < chunks; ++k) {
      for (uint32_t v = 1; v < 256; ++v) {
        uint64_t* row = c.activation_.data() + (k * 256 + v) * words;
        const uint64_t* rest =
            c.activation_.data() + (k * 256 + (v & (v - 1))) * words;
        const size_t j = 8 * k + std::countr_zero(v);
        for (size_t w = 0; w < words; ++w) {
          row[w] = rest[w] | (j < bits ? activates[j * words + w] : 0);
        }
      }
    }
  }
  return c;
}

StateVector Circuit::initial_valuation() const {
  StateVector v(state_bits());
  v.Set(0, true);
  return v;
}

namespace {

std::string NextStateFormula(const Trigger& t) {
  std::string out = "(X = " + DisplayByte(t.letter) + ") & ";
  if (t.trigger_set.size() == 1) {
    return out + "V(" + std::to_string(*t.trigger_set.begin()) + ")";
  }
  out += '(';
  bool first = true;
  for (uint32_t j : t.trigger_set) {
    if (!first) out += " | ";
    first = false;
    out += "V(" + std::to_string(j) + ")";
  }
  return out + ")";
}

}  // namespace

std::string Circuit::Dump() const {
  std::string out;
  out += "m = " + std::to_string(positions()) + "\n";
  out += std::string("mode = ") + StartModeName(start_mode_) + "\n";
  out += std::string("eps = ") + (skippable_ ? "1" : "0") + "\n";
  out += "V0 := " + initial_valuation().ToString() + "\n";
  out += std::string("F0 := ") +
         (start_mode_ == StartMode::kAnywhere ? "1" : "0") + "\n";
  for (const Trigger& t : triggers_) {
    out += "F" + std::to_string(t.position) + " := " + NextStateFormula(t) +
           "\n";
  }
  out += "Y := ";
  const bool wrap = output_set_.size() > 1;
  bool first = true;
  for (uint32_t i : output_set_) {
    if (!first) out += " | ";
    first = false;
    const std::string f = NextStateFormula(trigger(i));
    out += wrap ? "(" + f + ")" : f;
  }
  // A skippable expression also accepts wherever a match may start.
  if (skippable_ && start_mode_ == StartMode::kAnywhere) out += " | 1";
  out += "\n";
  return out;
}

}  // namespace seqcirc
