#include <string>

#include "benchmark/benchmark.h"
#include "seqcirc/circuit.h"
#include "seqcirc/matcher.h"
#include "seqcirc/parser.h"
#include "seqcirc/workload.h"

namespace seqcirc {
namespace {

constexpr size_t kInputBytes = size_t{1} << 22;  // 4 MiB

PatternFamily Family(int index, int n) {
  switch (index) {
    case 0:
      return PatternFamily::RunningExample();
    case 1:
      return PatternFamily::AlphabetChain();
    case 2:
      return PatternFamily::PrefixedAlphabetChain();
    case 3:
      return PatternFamily::OptPow(n);
    default:
      return PatternFamily::NondetSuffix(n);
  }
}

// Suffix matching throughput over a uniform random corpus.
void BM_Match(benchmark::State& state) {
  const PatternFamily family =
      Family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const std::string pattern = GeneratePattern(family);
  const Circuit circuit =
      Circuit::Build(Mark(Parse(pattern)), StartMode::kAnywhere);
  const std::string input =
      GenerateInput(DefaultAlphabet(family.kind), kInputBytes, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Run(circuit, input, MatchMode::kSuffixAtEnd));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(input.size()));
  state.SetLabel(pattern.size() > 40 ? pattern.substr(0, 37) + "..." : pattern);
}
BENCHMARK(BM_Match)
    ->Args({0, 0})
    ->Args({1, 0})
    ->Args({2, 0})
    ->ArgsProduct({{3}, {1, 10, 20, 30, 40, 100}})
    ->ArgsProduct({{4}, {1, 10, 20, 30, 100}})
    ->Unit(benchmark::kMillisecond);

void BM_Build(benchmark::State& state) {
  const std::string pattern =
      GeneratePattern(PatternFamily::NondetSuffix(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Circuit::Build(Mark(Parse(pattern)), StartMode::kAnywhere));
  }
}
BENCHMARK(BM_Build)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace
}  // namespace seqcirc

BENCHMARK_MAIN();
