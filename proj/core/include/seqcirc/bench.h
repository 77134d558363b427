#ifndef SEQCIRC_BENCH_H_
#define SEQCIRC_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "seqcirc/circuit.h"
#include "seqcirc/matcher.h"

namespace seqcirc {

inline constexpr int kDefaultBenchRuns = 10;

// Throughput is input bytes over the fastest of the repeated runs. Two
// timings are kept per run: the match loop alone, and the total including
// reading the input file (zero-length when matching an in-memory buffer).
struct BenchReport {
  std::string pattern;
  MatchMode mode = MatchMode::kSuffixAtEnd;
  uint64_t input_bytes = 0;
  int runs = 0;
  double min_elapsed = 0;  // seconds, match loop
  double throughput = 0;   // bytes per second, = input_bytes / min_elapsed
  std::vector<double> per_run_elapsed;
  double min_total = 0;
  double total_throughput = 0;
  std::vector<double> per_run_total;
  double build_seconds = 0;
  int positions = 0;
  bool accepted = false;

  double throughput_mb() const { return throughput / 1e6; }
  double throughput_mib() const { return throughput / (1024.0 * 1024.0); }
};

// Builds a report from per-run timings. per_run_total defaults to the match
// timings when empty. Throws std::invalid_argument when per_run_elapsed is
// empty or sizes differ.
BenchReport MakeBenchReport(std::string pattern, MatchMode mode,
                            uint64_t input_bytes,
                            std::vector<double> per_run_elapsed,
                            std::vector<double> per_run_total = {});

// Times `runs` matches of an in-memory input.
BenchReport BenchBuffer(const Circuit& circuit, std::string_view pattern,
                        std::string_view input, MatchMode mode,
                        int runs = kDefaultBenchRuns);

// Parses and builds the pattern once, then reads and matches the file `runs`
// times. Throws SyntaxError, CircuitError or IoError.
BenchReport BenchFile(std::string_view pattern,
                      const std::filesystem::path& input, MatchMode mode,
                      int runs = kDefaultBenchRuns);

// One "key: value" pair per line.
std::string FormatKeyValue(const BenchReport& report);
// Aligned table for people.
std::string FormatTable(const BenchReport& report);

}  // namespace seqcirc

#endif  // SEQCIRC_BENCH_H_
