#ifndef SEQCIRC_WORKLOAD_H_
#define SEQCIRC_WORKLOAD_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace seqcirc {

// Benchmark pattern families.
enum class PatternFamilyKind {
  kAlphabetChain,          // abc...z
  kPrefixedAlphabetChain,  // (x|y|z)abc...z
  kOptPow,                 // (a?)^n a^n
  kNondetSuffix,           // ((a|b)*)a(a|b)^n
  kRunningExample,         // (ab|b)*ba
};

struct PatternFamily {
  PatternFamilyKind kind = PatternFamilyKind::kRunningExample;
  int n = 0;  // used by kOptPow and kNondetSuffix; must be >= 1 there

  static PatternFamily AlphabetChain() {
    return {PatternFamilyKind::kAlphabetChain, 0};
  }
  static PatternFamily PrefixedAlphabetChain() {
    return {PatternFamilyKind::kPrefixedAlphabetChain, 0};
  }
  static PatternFamily OptPow(int n) { return {PatternFamilyKind::kOptPow, n}; }
  static PatternFamily NondetSuffix(int n) {
    return {PatternFamilyKind::kNondetSuffix, n};
  }
  static PatternFamily RunningExample() {
    return {PatternFamilyKind::kRunningExample, 0};
  }

  bool parameterized() const {
    return kind == PatternFamilyKind::kOptPow ||
           kind == PatternFamilyKind::kNondetSuffix;
  }
};

// "alphabet-chain", "prefixed-alphabet-chain", "opt-pow", "nondet-suffix",
// "running-example".
const char* PatternFamilyName(PatternFamilyKind kind);
std::optional<PatternFamilyKind> ParsePatternFamilyName(std::string_view name);

// Pattern text of a family member. Throws std::invalid_argument when a
// parameterized family has n < 1.
std::string GeneratePattern(const PatternFamily& family);

// The alphabet each family is benchmarked over.
std::string DefaultAlphabet(PatternFamilyKind kind);

// `size` bytes drawn uniformly from the distinct bytes of `alphabet`, using
// a fixed mt19937_64 stream so the output depends only on the arguments.
// Throws std::invalid_argument for an empty alphabet.
std::string GenerateInput(std::string_view alphabet, size_t size,
                          uint64_t seed);

inline constexpr std::string_view kLowercaseAlphabet =
    "abcdefghijklmnopqrstuvwxyz";
inline constexpr size_t kDefaultCorpusBytes = size_t{8} << 20;  // 8 MiB

}  // namespace seqcirc

#endif  // SEQCIRC_WORKLOAD_H_
