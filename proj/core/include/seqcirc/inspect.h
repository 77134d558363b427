#ifndef SEQCIRC_INSPECT_H_
#define SEQCIRC_INSPECT_H_

#include <string>
#include <string_view>

#include "seqcirc/circuit.h"

namespace seqcirc {

// Human-readable report of every construction stage for `pattern`: the
// marked expression, per-node eps/outs annotations, the trigger table, the
// output set and the circuit listing. Throws SyntaxError or CircuitError.
std::string InspectText(std::string_view pattern,
                        StartMode mode = StartMode::kAnchored);

// The same content as a JSON document. Trigger records look like
//   {"position": 1, "letter": "a", "byte": 97, "trigger_set": [0, 2, 3]}
std::string InspectJson(std::string_view pattern,
                        StartMode mode = StartMode::kAnchored);

}  // namespace seqcirc

#endif  // SEQCIRC_INSPECT_H_
