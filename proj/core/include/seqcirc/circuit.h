#ifndef SEQCIRC_CIRCUIT_H_
#define SEQCIRC_CIRCUIT_H_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcirc/analysis.h"
#include "seqcirc/expr.h"
#include "seqcirc/position_set.h"

namespace seqcirc {

// Next-state function of the initial position.
enum class StartMode {
  kAnchored,  // F0 := 0, match from the first byte only
  kAnywhere,  // F0 := 1, a match may start at any byte
};

const char* StartModeName(StartMode mode);

// Valuation of the (m+1) state bits, packed into 64-bit words.
class StateVector {
 public:
  static constexpr size_t kWordBits = 64;

  StateVector() = default;
  explicit StateVector(size_t bits)
      : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}
  // Bits given as 0/1 values, index 0 first.
  static StateVector FromBits(std::initializer_list<int> bits);

  size_t size() const { return bits_; }
  bool Get(size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void Set(size_t i, bool value);
  void Reset();
  bool None() const;

  std::span<uint64_t> words() { return words_; }
  std::span<const uint64_t> words() const { return words_; }

  // "(1,0,0,0,0,0)"
  std::string ToString() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

struct BuildOptions {
  int max_positions = 4096;
  // Upper bound on the lookup tables used for matching. Circuits whose
  // tables would be larger are evaluated position by position instead.
  size_t max_table_bytes = size_t{16} << 20;
};

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sequential circuit recognizing a marked expression:
//   V0      = (1, 0, ..., 0)
//   F0      = 0 (anchored) or 1 (anywhere)
//   Fi      = (X = letter_i) and OR_{j in trigger_set_i} V(j)
//   Y       = OR_{i in output_set} Fi
//
// The circuit is immutable once built and may be shared between threads.
class Circuit {
 public:
  // Throws CircuitError when the expression has more letter occurrences
  // than options.max_positions.
  static Circuit Build(const MarkedExpr& marked, StartMode mode,
                       const BuildOptions& options = {});

  // m
  int positions() const { return static_cast<int>(triggers_.size()); }
  size_t state_bits() const { return triggers_.size() + 1; }
  const std::vector<Trigger>& triggers() const { return triggers_; }
  const Trigger& trigger(uint32_t position) const {
    return triggers_[position - 1];
  }
  const PositionSet& output_set() const { return output_set_; }
  StartMode start_mode() const { return start_mode_; }
  bool skippable() const { return skippable_; }
  StateVector initial_valuation() const;

  // Text listing in the circuit notation, one F line per position:
  //   m = 5
  //   mode = anchored
  //   eps = 0
  //   V0 := (1,0,0,0,0,0)
  //   F0 := 0
  //   F1 := (X = a) & (V(0) | V(2) | V(3))
  //   ...
  //   Y := (X = a) & V(4)
  std::string Dump() const;

  // -- Evaluation layout --------------------------------------------------
  //
  // Positions are grouped by letter. For byte b, the entries in
  // [letter_begin(b), letter_end(b)) list the positions reading b, and entry
  // e owns the trigger mask words [e * word_count(), (e + 1) * word_count()).

  size_t word_count() const { return word_count_; }
  uint32_t letter_begin(uint8_t byte) const { return letter_offsets_[byte]; }
  uint32_t letter_end(uint8_t byte) const {
    return letter_offsets_[byte + 1];
  }
  uint32_t entry_position(uint32_t entry) const {
    return entry_positions_[entry];
  }
  const uint64_t* entry_mask(uint32_t entry) const {
    return entry_masks_.data() + size_t{entry} * word_count_;
  }
  // Output positions, plus bit 0 when the expression is skippable: a live
  // initial position then stands for a completed empty match.
  std::span<const uint64_t> accept_mask() const { return accept_mask_; }

  // Lookup tables, absent when they would exceed BuildOptions::
  // max_table_bytes. Each table row is word_count() words. letter_mask(b)
  // holds the positions reading b. Chunk k covers state bits 8k..8k+7, and
  // activation(k, v) holds every position whose trigger set meets the bits
  // of v in that chunk. One step is then
  //   next = start | (letter_mask(X) & OR_k activation(k, chunk_k(V))).
  bool has_tables() const { return !activation_.empty(); }
  size_t chunk_count() const { return (state_bits() + 7) / 8; }
  const uint64_t* activation(size_t chunk, uint8_t value) const {
    return activation_.data() + (chunk * 256 + value) * word_count_;
  }
  const uint64_t* letter_mask(uint8_t byte) const {
    return letter_masks_.data() + size_t{byte} * word_count_;
  }

 private:
  Circuit() = default;

  std::vector<Trigger> triggers_;
  PositionSet output_set_;
  StartMode start_mode_ = StartMode::kAnchored;
  bool skippable_ = false;

  size_t word_count_ = 0;
  std::array<uint32_t, 257> letter_offsets_{};
  std::vector<uint32_t> entry_positions_;
  std::vector<uint64_t> entry_masks_;
  std::vector<uint64_t> accept_mask_;
  std::vector<uint64_t> activation_;
  std::vector<uint64_t> letter_masks_;
};

}  // namespace seqcirc

#endif  // SEQCIRC_CIRCUIT_H_
