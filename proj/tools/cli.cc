#include "cli.h"

#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqcirc/bench.h"
#include "seqcirc/circuit.h"
#include "seqcirc/codegen.h"
#include "seqcirc/expr.h"
#include "seqcirc/inspect.h"
#include "seqcirc/io.h"
#include "seqcirc/matcher.h"
#include "seqcirc/oracle.h"
#include "seqcirc/parser.h"
#include "seqcirc/workload.h"

namespace seqcirc::cli {
namespace {

const std::map<std::string, MatchMode> kModes = {
    {"full", MatchMode::kFullMatch},
    {"suffix", MatchMode::kSuffixAtEnd},
    {"anywhere", MatchMode::kContainsAnywhere},
};

constexpr size_t kChunkBytes = size_t{1} << 20;

struct Options {
  std::string pattern;
  std::string input;
  MatchMode mode = MatchMode::kSuffixAtEnd;
  std::string format;
  bool use_oracle = false;
  int runs = kDefaultBenchRuns;
  std::string alphabet{kLowercaseAlphabet};
  size_t size = kDefaultCorpusBytes;
  uint64_t seed = 1;
  std::string out_path;
  std::string family;
  int n = 0;
  std::string backend{kDefaultBackend};
};

void AddMode(CLI::App* cmd, Options& o, const char* help) {
  cmd->add_option("--mode", o.mode, help)
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
}

Circuit BuildCircuit(const std::string& pattern, MatchMode mode) {
  return Circuit::Build(Mark(Parse(pattern)), RequiredStartMode(mode));
}

int DoInspect(const Options& o, std::ostream& out) {
  const StartMode start = RequiredStartMode(o.mode);
  out << (o.format == "json" ? InspectJson(o.pattern, start)
                             : InspectText(o.pattern, start));
  return kExitOk;
}

int DoMatch(const Options& o, std::ostream& out) {
  if (o.use_oracle) {
    const bool accepted =
        OracleMatch(Mark(Parse(o.pattern)), ReadFile(o.input), o.mode);
    out << (accepted ? "1" : "0") << "\n";
    return kExitOk;
  }
  const Circuit circuit = BuildCircuit(o.pattern, o.mode);
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw IoError("cannot open '" + o.input + "'");
  StreamMatcher matcher(circuit, o.mode);
  std::vector<char> buffer(kChunkBytes);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    matcher.Feed(std::string_view(buffer.data(),
                                  static_cast<size_t>(in.gcount())));
  }
  if (in.bad()) throw IoError("cannot read '" + o.input + "'");
  out << (matcher.result().accepted ? "1" : "0") << "\n";
  return kExitOk;
}

int DoGenInput(const Options& o, std::ostream& out) {
  WriteFile(o.out_path, GenerateInput(o.alphabet, o.size, o.seed));
  out << "wrote " << o.size << " bytes to " << o.out_path << "\n";
  return kExitOk;
}

int DoGenPattern(const Options& o, std::ostream& out, std::ostream& err) {
  const auto kind = ParsePatternFamilyName(o.family);
  if (!kind) {
    err << "unknown pattern family '" << o.family << "'\n";
    return kExitUsage;
  }
  out << GeneratePattern({*kind, o.n}) << "\n";
  return kExitOk;
}

int DoBench(const Options& o, std::ostream& out) {
  const BenchReport report = BenchFile(o.pattern, o.input, o.mode, o.runs);
  out << (o.format == "kv" ? FormatKeyValue(report) : FormatTable(report));
  return kExitOk;
}

int DoCodegen(const Options& o, std::ostream& out) {
  const Circuit circuit = BuildCircuit(o.pattern, o.mode);
  const GeneratedProgram program = Emit(circuit, o.mode, o.backend);
  if (o.out_path.empty()) {
    out << program.source_text;
  } else {
    WriteFile(o.out_path, program.source_text);
    const CodegenBackend backend = FindBackend(program.backend_id);
    out << "wrote " << o.out_path << " (circuit "
        << program.circuit_fingerprint << ")\n"
        << "compile with: "
        << CompileCommand(backend, program.backend_id == "c" ? "cc" : "c++",
                          o.out_path, "matcher")
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Regular expression matching with sequential circuits"};
  app.require_subcommand(1);

  CLI::App* inspect =
      app.add_subcommand("inspect", "Show the construction stages of a pattern");
  inspect->add_option("pattern", o.pattern, "Regular expression")->required();
  AddMode(inspect, o, "Start mode: full = anchored, suffix/anywhere = anywhere");
  o.mode = MatchMode::kFullMatch;
  inspect->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* match = app.add_subcommand("match", "Match a file; prints 1 or 0");
  match->add_option("pattern", o.pattern, "Regular expression")->required();
  match->add_option("input", o.input, "Input file")->required();
  AddMode(match, o, "full, suffix (default) or anywhere");
  match->add_flag("--oracle", o.use_oracle,
                  "Use the brute-force reference matcher")
      ->group("");

  CLI::App* gen_input =
      app.add_subcommand("gen-input", "Write a uniform random corpus");
  gen_input->add_option("--alphabet", o.alphabet, "Bytes to draw from");
  gen_input->add_option("--size", o.size, "Corpus size in bytes");
  gen_input->add_option("--seed", o.seed, "Random seed");
  gen_input->add_option("--out", o.out_path, "Output path")->required();

  CLI::App* gen_pattern =
      app.add_subcommand("gen-pattern", "Print a benchmark pattern");
  gen_pattern
      ->add_option("family", o.family,
                   "alphabet-chain, prefixed-alphabet-chain, opt-pow, "
                   "nondet-suffix or running-example")
      ->required();
  gen_pattern->add_option("--n", o.n, "Family parameter");

  CLI::App* bench = app.add_subcommand("bench", "Time matching of a file");
  bench->add_option("pattern", o.pattern, "Regular expression")->required();
  bench->add_option("input", o.input, "Input file")->required();
  AddMode(bench, o, "full, suffix (default) or anywhere");
  bench->add_option("--runs", o.runs, "Repetitions; the minimum is reported")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", o.format, "table (default) or kv")
      ->check(CLI::IsMember({"table", "kv"}));

  CLI::App* codegen =
      app.add_subcommand("codegen", "Emit a standalone matcher program");
  codegen->add_option("pattern", o.pattern, "Regular expression")->required();
  AddMode(codegen, o, "full, suffix (default) or anywhere");
  codegen->add_option("--backend", o.backend, "Code generator backend");
  codegen->add_option("--out", o.out_path, "Write the source here");

  // Subcommand-specific defaults for --mode.
  for (CLI::App* cmd : {match, bench, codegen}) {
    cmd->preparse_callback([&o](size_t) { o.mode = MatchMode::kSuffixAtEnd; });
  }
  inspect->preparse_callback([&o](size_t) { o.mode = MatchMode::kFullMatch; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inspect) return DoInspect(o, out);
    if (*match) return DoMatch(o, out);
    if (*gen_input) return DoGenInput(o, out);
    if (*gen_pattern) return DoGenPattern(o, out, err);
    if (*bench) return DoBench(o, out);
    if (*codegen) return DoCodegen(o, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    if (!o.pattern.empty()) {
      err << "  " << o.pattern << "\n  " << std::string(e.offset(), ' ')
          << "^\n";
    }
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace seqcirc::cli
