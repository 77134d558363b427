#ifndef SEQCIRC_PARSER_H_
#define SEQCIRC_PARSER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seqcirc/expr.h"

namespace seqcirc {

// Malformed pattern. offset() is the 0-based byte offset of the problem.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(size_t offset, const std::string& what);
  size_t offset() const { return offset_; }
  // The message without the "syntax error at offset N: " prefix.
  const std::string& reason() const { return reason_; }

 private:
  size_t offset_;
  std::string reason_;
};

struct ParseOptions {
  // Parenthesis nesting limit; deeper groups are reported as syntax errors.
  int max_group_depth = 1000;
};

// Pattern syntax, from tightest to loosest binding:
//   postfix  e*  e+  e?
//   concat   juxtaposition, or an explicit ';' between operands
//   union    e|e
// Parentheses group. A backslash makes any of  ( ) * + ? | ; \  a letter.
// Every other byte is a letter by itself.
Expr Parse(std::string_view pattern, const ParseOptions& options = {});

}  // namespace seqcirc

#endif  // SEQCIRC_PARSER_H_
