#pragma once

#include "strebel/metric.hpp"

#include <string>

namespace strebel::cli {

// Graphviz export. DOT is orderless, so the embedding is preserved as a
// per-vertex "rotation" attribute (counterclockwise half-edge list); faces
// and their residues are listed as comments.
std::string dot_export(const MetricRibbonGraph& mg);

}  // namespace strebel::cli
