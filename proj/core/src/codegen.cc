#include "seqcirc/codegen.h"

#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace seqcirc {
namespace {

// Logical operator spellings for one target language.
struct Syntax {
  const char* op_and;
  const char* op_or;
};

constexpr Syntax kCppSyntax{"and", "or"};
constexpr Syntax kCSyntax{"&&", "||"};

std::string LetterLiteral(uint8_t byte) {
  if (byte >= 0x20 && byte < 0x7f && byte != '\'' && byte != '\\') {
    return std::string{'\'', static_cast<char>(byte), '\''};
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "0x%02X", byte);
  return buf;
}

std::string Disjunction(const PositionSet& set, const Syntax& syntax) {
  std::string out = "(";
  bool first = true;
  for (uint32_t j : set) {
    if (!first) out += std::string(" ") + syntax.op_or + " ";
    first = false;
    out += "state[" + std::to_string(j) + "]";
  }
  return out + ")";
}

// Output of the current state: any output position, or the initial
// position for skippable expressions.
std::string OutputExpression(const Circuit& c, const Syntax& syntax) {
  PositionSet bits = c.output_set();
  if (c.skippable()) bits.Insert(0);
  return Disjunction(bits, syntax);
}

std::string ArrayInit(size_t n, bool initial) {
  if (n > 64) return initial ? "{1}" : "{0}";
  std::string out = "{";
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) out += ',';
    out += (initial && i == 0) ? '1' : '0';
  }
  return out + "}";
}

void EmitHeaderComment(std::ostringstream& os, const Circuit& c,
                       MatchMode mode, const char* comment) {
  os << comment << " Sequential circuit matcher generated by seqcirc.\n";
  os << comment << " circuit " << CircuitFingerprint(c) << ", mode "
     << MatchModeName(mode) << "\n";
  os << comment << " usage: prog <input-file>  (prints 1 or 0)\n";
  os << comment << "\n";
  std::istringstream dump(c.Dump());
  for (std::string line; std::getline(dump, line);) {
    os << comment << "   " << line << "\n";
  }
}

void EmitStepBody(std::ostringstream& os, const Circuit& c,
                  const Syntax& syntax, const char* indent) {
  if (c.start_mode() == StartMode::kAnywhere) {
    os << indent << "next_state[0] = 1; // Start anywhere\n";
  } else {
    os << indent << "next_state[0] = 0; // Start from the first letter only\n";
  }
  for (const Trigger& t : c.triggers()) {
    os << indent << "next_state[" << t.position << "] = (letter == "
       << LetterLiteral(t.letter) << ") " << syntax.op_and << " "
       << Disjunction(t.trigger_set, syntax) << ";\n";
  }
  os << indent << "memcpy(state, next_state, sizeof(state));\n";
}

std::string EmitCpp(const Circuit& c, MatchMode mode) {
  const size_t n = c.state_bits();
  const bool latch = mode == MatchMode::kContainsAnywhere;
  std::ostringstream os;
  EmitHeaderComment(os, c, mode, "//");
  os << "\n"
        "#include <cstring>\n"
        "#include <fstream>\n"
        "#include <iostream>\n"
        "#include <iterator>\n"
        "#include <string>\n"
        "\n"
        "using std::memcpy;\n"
        "\n"
        "int main(int argc, char **argv) {\n"
        "  if (argc != 2) {\n"
        "    std::cerr << \"usage: \" << argv[0] << \" <input-file>\" << "
        "std::endl;\n"
        "    return 2;\n"
        "  }\n"
        "  std::ifstream ifs(argv[1], std::ios::binary);\n"
        "  if (!ifs) {\n"
        "    std::cerr << \"cannot open \" << argv[1] << std::endl;\n"
        "    return 2;\n"
        "  }\n"
        "  std::string word((std::istreambuf_iterator<char>(ifs)), "
        "(std::istreambuf_iterator<char>()));\n"
        "  if (ifs.bad()) {\n"
        "    std::cerr << \"cannot read \" << argv[1] << std::endl;\n"
        "    return 2;\n"
        "  }\n";
  os << "  int state[" << n << "] = " << ArrayInit(n, true) << ";\n";
  os << "  int next_state[" << n << "] = " << ArrayInit(n, false) << ";\n";
  if (latch) {
    os << "  int accepted = " << OutputExpression(c, kCppSyntax) << ";\n";
  }
  os << "  for (char c : word) {\n"
        "    const unsigned char letter = static_cast<unsigned char>(c);\n";
  EmitStepBody(os, c, kCppSyntax, "    ");
  if (latch) {
    os << "    accepted = accepted or " << OutputExpression(c, kCppSyntax)
       << ";\n";
  }
  os << "  }\n";
  if (latch) {
    os << "  std::cout << accepted << std::endl;\n";
  } else {
    os << "  // An empty word leaves state at V0; state[0] then reports a "
          "skippable expression.\n";
    os << "  std::cout << " << OutputExpression(c, kCppSyntax)
       << " << std::endl;\n";
  }
  os << "  return 0;\n}\n";
  return os.str();
}

std::string EmitC(const Circuit& c, MatchMode mode) {
  const size_t n = c.state_bits();
  const bool latch = mode == MatchMode::kContainsAnywhere;
  std::ostringstream os;
  EmitHeaderComment(os, c, mode, "//");
  os << "\n"
        "#include <stdio.h>\n"
        "#include <string.h>\n"
        "\n"
        "int main(int argc, char **argv) {\n"
        "  if (argc != 2) {\n"
        "    fprintf(stderr, \"usage: %s <input-file>\\n\", argv[0]);\n"
        "    return 2;\n"
        "  }\n"
        "  FILE *f = fopen(argv[1], \"rb\");\n"
        "  if (f == NULL) {\n"
        "    fprintf(stderr, \"cannot open %s\\n\", argv[1]);\n"
        "    return 2;\n"
        "  }\n";
  os << "  int state[" << n << "] = " << ArrayInit(n, true) << ";\n";
  os << "  int next_state[" << n << "] = " << ArrayInit(n, false) << ";\n";
  if (latch) {
    os << "  int accepted = " << OutputExpression(c, kCSyntax) << ";\n";
  }
  os << "  int ch;\n"
        "  while ((ch = getc(f)) != EOF) {\n"
        "    const unsigned char letter = (unsigned char)ch;\n";
  EmitStepBody(os, c, kCSyntax, "    ");
  if (latch) {
    os << "    accepted = accepted || " << OutputExpression(c, kCSyntax)
       << ";\n";
  }
  os << "  }\n"
        "  if (ferror(f)) {\n"
        "    fprintf(stderr, \"cannot read %s\\n\", argv[1]);\n"
        "    fclose(f);\n"
        "    return 2;\n"
        "  }\n"
        "  fclose(f);\n";
  if (latch) {
    os << "  printf(\"%d\\n\", accepted);\n";
  } else {
    os << "  printf(\"%d\\n\", " << OutputExpression(c, kCSyntax) << ");\n";
  }
  os << "  return 0;\n}\n";
  return os.str();
}

struct Registry {
  std::mutex mu;
  std::map<std::string, CodegenBackend, std::less<>> backends;

  Registry() {
    backends["cpp"] = {"cpp", ".cc",
                       "{cc} -std=c++17 -O2 -Wall -Wextra -o {out} {src}",
                       EmitCpp};
    backends["c"] = {"c", ".c", "{cc} -std=c11 -O2 -Wall -Wextra -o {out} {src}",
                     EmitC};
  }
};

Registry& GetRegistry() {
  static Registry* registry = new Registry();
  return *registry;
}

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  for (size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

void RegisterBackend(CodegenBackend backend) {
  Registry& r = GetRegistry();
  std::lock_guard<std::mutex> lock(r.mu);
  std::string id = backend.id;
  r.backends[id] = std::move(backend);
}

std::vector<std::string> BackendIds() {
  Registry& r = GetRegistry();
  std::lock_guard<std::mutex> lock(r.mu);
  std::vector<std::string> ids;
  for (const auto& [id, backend] : r.backends) ids.push_back(id);
  return ids;
}

CodegenBackend FindBackend(std::string_view id) {
  Registry& r = GetRegistry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.backends.find(id);
  if (it == r.backends.end()) {
    throw CodegenError("unknown codegen backend '" + std::string(id) + "'");
  }
  return it->second;
}

std::string CircuitFingerprint(const Circuit& circuit) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : circuit.Dump()) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GeneratedProgram Emit(const Circuit& circuit, MatchMode mode,
                      std::string_view backend) {
  const CodegenBackend b = FindBackend(backend);
  if (circuit.start_mode() != RequiredStartMode(mode)) {
    throw CodegenError(std::string("match mode '") + MatchModeName(mode) +
                       "' needs a circuit built with start mode '" +
                       StartModeName(RequiredStartMode(mode)) + "'");
  }
  return {b.emit(circuit, mode), b.id, CircuitFingerprint(circuit)};
}

std::string CompileCommand(const CodegenBackend& backend,
                           std::string_view compiler, std::string_view source,
                           std::string_view output) {
  std::string cmd = backend.compile_command;
  ReplaceAll(cmd, "{cc}", compiler);
  ReplaceAll(cmd, "{src}", source);
  ReplaceAll(cmd, "{out}", output);
  return cmd;
}

}  // namespace seqcirc
