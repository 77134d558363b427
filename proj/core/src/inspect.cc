#include "seqcirc/inspect.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "json.hpp"
#include "seqcirc/analysis.h"
#include "seqcirc/expr.h"
#include "seqcirc/parser.h"

namespace seqcirc {
namespace {

struct NodeRow {
  NodeId id;
  int depth;
};

// Pre-order, left operand first.
std::vector<NodeRow> PreOrder(const Expr& expr) {
  std::vector<NodeRow> rows;
  std::vector<NodeRow> stack = {{expr.root(), 0}};
  while (!stack.empty()) {
    NodeRow row = stack.back();
    stack.pop_back();
    rows.push_back(row);
    const ExprNode& node = expr.node(row.id);
    if (node.kind == ExprKind::kLetter) continue;
    if (IsBinary(node.kind)) stack.push_back({node.right, row.depth + 1});
    stack.push_back({node.left, row.depth + 1});
  }
  return rows;
}

std::string PadRight(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string PadLeft(const std::string& s, size_t width) {
  return s.size() < width ? std::string(width - s.size(), ' ') + s : s;
}

}  // namespace

std::string InspectText(std::string_view pattern, StartMode mode) {
  const MarkedExpr marked = Mark(Parse(pattern));
  const PositionAnalysis analysis(marked);
  const Circuit circuit = Circuit::Build(marked, mode);

  std::string out;
  out += "pattern: " + std::string(pattern) + "\n";
  out += "marked:  " + RenderMarked(marked) + "\n";
  out += "m = " + std::to_string(marked.size()) + "\n\n";

  out += "annotations:\n";
  std::vector<std::pair<std::string, NodeId>> labels;
  size_t width = 4;
  for (const NodeRow& row : PreOrder(marked.expr())) {
    std::string label(static_cast<size_t>(row.depth) * 2, ' ');
    label += RenderMarked(marked, row.id);
    width = std::max(width, label.size());
    labels.emplace_back(std::move(label), row.id);
  }
  out += "  " + PadRight("node", width) + "  eps  outs\n";
  for (const auto& [label, id] : labels) {
    out += "  " + PadRight(label, width) + "  " +
           (analysis.eps(id) ? "  1" : "  0") + "  " +
           analysis.outs(id).ToString() + "\n";
  }

  out += "\ntriggers:\n";
  out += "  position  letter  trigger set\n";
  for (const Trigger& t : circuit.triggers()) {
    out += "  " + PadLeft(std::to_string(t.position), 8) + "  " +
           PadRight(DisplayByte(t.letter), 6) + "  " +
           t.trigger_set.ToString() + "\n";
  }
  out += "\noutput set: " + circuit.output_set().ToString() + "\n";
  out += "\ncircuit:\n" + circuit.Dump();
  return out;
}

std::string InspectJson(std::string_view pattern, StartMode mode) {
  const MarkedExpr marked = Mark(Parse(pattern));
  const PositionAnalysis analysis(marked);
  const Circuit circuit = Circuit::Build(marked, mode);

  nlohmann::ordered_json doc;
  doc["marked"] = RenderMarked(marked);
  doc["m"] = marked.size();
  doc["mode"] = StartModeName(mode);
  doc["eps"] = analysis.root_eps();
  doc["outs"] = analysis.root_outs().members();

  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const NodeRow& row : PreOrder(marked.expr())) {
    nodes.push_back({{"depth", row.depth},
                     {"expr", RenderMarked(marked, row.id)},
                     {"eps", analysis.eps(row.id)},
                     {"outs", analysis.outs(row.id).members()}});
  }
  doc["nodes"] = std::move(nodes);

  nlohmann::ordered_json triggers = nlohmann::ordered_json::array();
  for (const Trigger& t : circuit.triggers()) {
    triggers.push_back({{"position", t.position},
                        {"letter", DisplayByte(t.letter)},
                        {"byte", t.letter},
                        {"trigger_set", t.trigger_set.members()}});
  }
  doc["triggers"] = std::move(triggers);
  doc["circuit"] = circuit.Dump();
  // The pattern may hold arbitrary bytes; replace invalid UTF-8 on output.
  doc["pattern"] = std::string(pattern);
  return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) +
         "\n";
}

}  // namespace seqcirc
