#include "seqcirc/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

#include "seqcirc/io.h"
#include "seqcirc/parser.h"

namespace seqcirc {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

double Rate(uint64_t bytes, double seconds) {
  return seconds > 0 ? static_cast<double>(bytes) / seconds
                     : std::numeric_limits<double>::infinity();
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string JoinTimings(const std::vector<double>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += Fixed(v[i], 6);
  }
  return out;
}

}  // namespace

BenchReport MakeBenchReport(std::string pattern, MatchMode mode,
                            uint64_t input_bytes,
                            std::vector<double> per_run_elapsed,
                            std::vector<double> per_run_total) {
  if (per_run_elapsed.empty()) {
    throw std::invalid_argument("a benchmark needs at least one run");
  }
  if (per_run_total.empty()) per_run_total = per_run_elapsed;
  if (per_run_total.size() != per_run_elapsed.size()) {
    throw std::invalid_argument("match and total timings differ in length");
  }
  BenchReport r;
  r.pattern = std::move(pattern);
  r.mode = mode;
  r.input_bytes = input_bytes;
  r.runs = static_cast<int>(per_run_elapsed.size());
  r.min_elapsed =
      *std::min_element(per_run_elapsed.begin(), per_run_elapsed.end());
  r.throughput = Rate(input_bytes, r.min_elapsed);
  r.min_total = *std::min_element(per_run_total.begin(), per_run_total.end());
  r.total_throughput = Rate(input_bytes, r.min_total);
  r.per_run_elapsed = std::move(per_run_elapsed);
  r.per_run_total = std::move(per_run_total);
  return r;
}

BenchReport BenchBuffer(const Circuit& circuit, std::string_view pattern,
                        std::string_view input, MatchMode mode, int runs) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  std::vector<double> elapsed;
  bool accepted = false;
  for (int i = 0; i < runs; ++i) {
    const auto t0 = Clock::now();
    accepted = Run(circuit, input, mode).accepted;
    elapsed.push_back(Seconds(t0, Clock::now()));
  }
  BenchReport r = MakeBenchReport(std::string(pattern), mode, input.size(),
                                  std::move(elapsed));
  r.accepted = accepted;
  r.positions = circuit.positions();
  return r;
}

BenchReport BenchFile(std::string_view pattern,
                      const std::filesystem::path& input, MatchMode mode,
                      int runs) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  const auto b0 = Clock::now();
  const Circuit circuit =
      Circuit::Build(Mark(Parse(pattern)), RequiredStartMode(mode));
  const double build = Seconds(b0, Clock::now());

  std::vector<double> elapsed;
  std::vector<double> total;
  uint64_t bytes = 0;
  bool accepted = false;
  for (int i = 0; i < runs; ++i) {
    const auto t0 = Clock::now();
    const std::string data = ReadFile(input);
    const auto t1 = Clock::now();
    accepted = Run(circuit, data, mode).accepted;
    const auto t2 = Clock::now();
    elapsed.push_back(Seconds(t1, t2));
    total.push_back(Seconds(t0, t2));
    bytes = data.size();
  }
  BenchReport r = MakeBenchReport(std::string(pattern), mode, bytes,
                                  std::move(elapsed), std::move(total));
  r.accepted = accepted;
  r.build_seconds = build;
  r.positions = circuit.positions();
  return r;
}

std::string FormatKeyValue(const BenchReport& r) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append(": ").append(value).append("\n");
  };
  line("pattern", r.pattern);
  line("mode", MatchModeName(r.mode));
  line("positions", std::to_string(r.positions));
  line("input_bytes", std::to_string(r.input_bytes));
  line("runs", std::to_string(r.runs));
  line("accepted", r.accepted ? "1" : "0");
  line("build_seconds", Fixed(r.build_seconds, 6));
  line("min_elapsed_seconds", Fixed(r.min_elapsed, 6));
  line("throughput_bytes_per_second", Fixed(r.throughput, 1));
  line("throughput_mb_per_second", Fixed(r.throughput_mb(), 3));
  line("throughput_mib_per_second", Fixed(r.throughput_mib(), 3));
  line("min_total_seconds", Fixed(r.min_total, 6));
  line("total_throughput_mb_per_second", Fixed(r.total_throughput / 1e6, 3));
  line("per_run_elapsed_seconds", JoinTimings(r.per_run_elapsed));
  line("per_run_total_seconds", JoinTimings(r.per_run_total));
  return out;
}

std::string FormatTable(const BenchReport& r) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-10s %s\n%-10s %s\n%-10s %llu bytes\n",
                "pattern", r.pattern.c_str(), "mode", MatchModeName(r.mode),
                "input", static_cast<unsigned long long>(r.input_bytes));
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-10s %d state bits (m = %d), built in %.3f ms\n",
                "circuit", r.positions + 1, r.positions,
                r.build_seconds * 1e3);
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-10s %d\n\n", "accepted", r.accepted);
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-6s %14s %14s\n", "run", "match (s)",
                "total (s)");
  out += buf;
  for (int i = 0; i < r.runs; ++i) {
    std::snprintf(buf, sizeof(buf), "%-6d %14.6f %14.6f\n", i + 1,
                  r.per_run_elapsed[i], r.per_run_total[i]);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "%-6s %14.6f %14.6f\n\n", "min", r.min_elapsed,
                r.min_total);
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "throughput %.2f MB/s (%.2f MiB/s) match, %.2f MB/s total\n",
                r.throughput_mb(), r.throughput_mib(),
                r.total_throughput / 1e6);
  out += buf;
  return out;
}

}  // namespace seqcirc
