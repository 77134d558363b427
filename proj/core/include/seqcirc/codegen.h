#ifndef SEQCIRC_CODEGEN_H_
#define SEQCIRC_CODEGEN_H_

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqcirc/circuit.h"
#include "seqcirc/matcher.h"

namespace seqcirc {

// Source of a standalone matcher specialized to one circuit. The compiled
// program takes the path of a file holding the input word as its only
// argument and prints "1" or "0" followed by a newline. It exits 0 on success
// and 2 when the file cannot be read.
struct GeneratedProgram {
  std::string source_text;
  std::string backend_id;
  std::string circuit_fingerprint;  // FNV-1a/64 of Circuit::Dump(), hex
};

class CodegenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodegenBackend {
  std::string id;
  std::string file_extension;  // ".cc"
  // Toolchain invocation the emitted source is written for. "{src}" and
  // "{out}" are replaced with the source and executable paths.
  std::string compile_command;
  std::function<std::string(const Circuit&, MatchMode)> emit;
};

// Built-in backends: "cpp" (default) and "c". Registering an id that already
// exists replaces it.
void RegisterBackend(CodegenBackend backend);
std::vector<std::string> BackendIds();
// Throws CodegenError for an unknown id.
CodegenBackend FindBackend(std::string_view id);

inline constexpr std::string_view kDefaultBackend = "cpp";

// Throws CodegenError for an unknown backend or when the circuit's start
// mode does not suit `mode`.
GeneratedProgram Emit(const Circuit& circuit, MatchMode mode,
                      std::string_view backend = kDefaultBackend);

std::string CircuitFingerprint(const Circuit& circuit);

// Expands a backend's compile_command template.
std::string CompileCommand(const CodegenBackend& backend,
                           std::string_view compiler, std::string_view source,
                           std::string_view output);

}  // namespace seqcirc

#endif  // SEQCIRC_CODEGEN_H_
