#ifndef SEQCIRC_TOOLS_CLI_H_
#define SEQCIRC_TOOLS_CLI_H_

#include <ostream>

namespace seqcirc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad arguments, pattern syntax errors
inline constexpr int kExitIo = 2;

// Entry point of the `seqcirc` tool; output goes to the given streams.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace seqcirc::cli

#endif  // SEQCIRC_TOOLS_CLI_H_
