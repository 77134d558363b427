#include "seqcirc/workload.h"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace seqcirc {

const char* PatternFamilyName(PatternFamilyKind kind) {
  switch (kind) {
    case PatternFamilyKind::kAlphabetChain:
      return "alphabet-chain";
    case PatternFamilyKind::kPrefixedAlphabetChain:
      return "prefixed-alphabet-chain";
    case PatternFamilyKind::kOptPow:
      return "opt-pow";
    case PatternFamilyKind::kNondetSuffix:
      return "nondet-suffix";
    case PatternFamilyKind::kRunningExample:
      return "running-example";
  }
  return "?";
}

std::optional<PatternFamilyKind> ParsePatternFamilyName(std::string_view name) {
  for (auto kind : {PatternFamilyKind::kAlphabetChain,
                    PatternFamilyKind::kPrefixedAlphabetChain,
                    PatternFamilyKind::kOptPow, PatternFamilyKind::kNondetSuffix,
                    PatternFamilyKind::kRunningExample}) {
    if (name == PatternFamilyName(kind)) return kind;
  }
  return std::nullopt;
}

std::string GeneratePattern(const PatternFamily& family) {
  if (family.parameterized() && family.n < 1) {
    throw std::invalid_argument(std::string(PatternFamilyName(family.kind)) +
                                " needs n >= 1");
  }
  std::string out;
  switch (family.kind) {
    case PatternFamilyKind::kAlphabetChain:
      out = kLowercaseAlphabet;
      break;
    case PatternFamilyKind::kPrefixedAlphabetChain:
      out = "(x|y|z)";
      out += kLowercaseAlphabet;
      break;
    case PatternFamilyKind::kOptPow:
      for (int i = 0; i < family.n; ++i) out += "(a?)";
      out.append(static_cast<size_t>(family.n), 'a');
      break;
    case PatternFamilyKind::kNondetSuffix:
      out = "((a|b)*)a";
      for (int i = 0; i < family.n; ++i) out += "(a|b)";
      break;
    case PatternFamilyKind::kRunningExample:
      out = "(ab|b)*ba";
      break;
  }
  return out;
}

std::string DefaultAlphabet(PatternFamilyKind kind) {
  return kind == PatternFamilyKind::kNondetSuffix
             ? std::string("ab")
             : std::string(kLowercaseAlphabet);
}

std::string GenerateInput(std::string_view alphabet, size_t size,
                          uint64_t seed) {
  std::string symbols(alphabet);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.empty()) throw std::invalid_argument("alphabet is empty");

  // Rejection sampling on the raw engine output; std distributions are not
  // specified bit-for-bit across standard libraries.
  std::mt19937_64 rng(seed);
  const uint64_t k = symbols.size();
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % k;
  std::string out(size, '\0');
  for (char& c : out) {
    uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    c = symbols[r % k];
  }
  return out;
}

}  // namespace seqcirc
