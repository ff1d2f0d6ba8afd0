#pragma once

#include <string>

#include "ptrust/graph_file.hpp"

namespace ptrust {

// Graphviz digraph of the model. Promise arrows are labeled "π:<body>"
// (dashed when conditional), trust arrows "τ:<body>=<value>" — the two
// arrow kinds are distinct and must stay visually distinguishable.
std::string export_dot(const GraphModel& model);

}  // namespace ptrust
