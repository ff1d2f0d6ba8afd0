#include "ptrust/dot.hpp"

#include <sstream>

#include "ptrust/text.hpp"

namespace ptrust {

std::string export_dot(const GraphModel& model) {
  std::ostringstream out;
  out << "digraph trustgraph {\n";
  out << "  rankdir=LR;\n";
  for (const AgentId& agent : model.roster) out << "  \"" << agent.name() << "\";\n";
  for (const Promise& p : model.promises) {
    out << "  \"" << p.sender().name() << "\" -> \"" << p.receiver().name()
        << "\" [label=\"π:" << to_string(p.body());
    if (p.condition()) out << "|" << to_string(*p.condition());
    out << "\"";
    if (p.condition()) out << ", style=dashed";
    out << "];\n";
  }
  for (const TrustEdge& e : model.trust_edges) {
    out << "  \"" << e.truster.name() << "\" -> \"" << e.trustee.name()
        << "\" [label=\"τ:" << to_string(e.body) << "="
        << text::format_value(e.value) << "\", color=blue];\n";
  }
  out << "}\n";
  return std::move(out).str();
}

}  // namespace ptrust
