#include "dot_export.hpp"

#include <sstream>

namespace strebel::cli {

std::string dot_export(const MetricRibbonGraph& mg) {
  require_metric(mg);
  std::ostringstream out;
  out << "graph ribbon {\n";

  const auto rv_entries = [&] {
    std::vector<Rational> entries;
    if (is_connected(mg.graph))
      for (const auto& r : residue_vector(mg).entries) entries.push_back(r);
    return entries;
  }();
  for (size_t j = 0; j < rv_entries.size(); ++j)
    out << "  // face " << j << ": residue " << fraction_string(rv_entries[j]) << "\n";

  std::vector<int> vertex_of(mg.graph.half_edge_count, -1);
  for (const auto& cycle : vertex_cycles(mg.graph)) {
    for (int h : cycle) vertex_of[h] = cycle.front();
    std::ostringstream rotation;
    for (size_t i = 0; i < cycle.size(); ++i) rotation << (i ? "," : "") << cycle[i];
    out << "  v" << cycle.front() << " [label=\"v" << cycle.front() << " (zero order "
        << static_cast<int>(cycle.size()) - 2 << ")\", rotation=\"" << rotation.str() << "\"];\n";
  }

  const auto edges = edge_list(mg.graph);
  for (size_t e = 0; e < edges.size(); ++e) {
    out << "  v" << vertex_of[edges[e].first] << " -- v" << vertex_of[edges[e].second] << " [label=\""
        << fraction_string(mg.lengths[e]) << "\", edge=" << e << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace strebel::cli
