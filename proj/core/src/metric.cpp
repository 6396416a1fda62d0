#include "strebel/metric.hpp"

#include <stdexcept>

namespace strebel {

void require_metric(const MetricRibbonGraph& mg) {
  require_valid(mg.graph);
  const auto edges = edge_list(mg.graph);
  if (mg.lengths.size() != edges.size()) throw std::invalid_argument("length count differs from edge count");
  for (size_t e = 0; e < mg.lengths.size(); ++e)
    if (mg.lengths[e] <= 0) throw std::invalid_argument("edge " + std::to_string(e) + " has non-positive length");
}

ResidueVector residue_vector(const MetricRibbonGraph& mg) {
  require_metric(mg);
  if (!is_connected(mg.graph)) throw std::invalid_argument("residue vector requires a connected graph");
  const auto edge_of = edge_index_by_halfedge(mg.graph);
  ResidueVector rv;
  rv.genus = genus(mg.graph);
  for (const auto& face : face_cycles(mg.graph)) {
    Rational perimeter = 0;
    for (int h : face.walk) perimeter += mg.lengths[edge_of[h]];
    rv.entries.push_back(perimeter);
  }
  return rv;
}

ZeroPartition zero_partition(const MetricRibbonGraph& mg) {
  require_metric(mg);
  if (!is_connected(mg.graph)) throw std::invalid_argument("zero partition requires a connected graph");
  ZeroPartition zp;
  for (const auto& [vertex, valency] : vertex_valencies(mg.graph)) {
    if (valency <= 2)
      throw std::invalid_argument("not a Strebel critical graph: vertex " + std::to_string(vertex) +
                                  " has valency " + std::to_string(valency));
    zp.parts.push_back(valency - 2);
  }
  int sum = 0;
  for (int m : zp.parts) sum += m;
  const int n = static_cast<int>(face_cycles(mg.graph).size());
  const int g = genus(mg.graph);
  if (sum != 2 * n + 4 * g - 4) throw std::logic_error("zero partition sum violates 2n + 4g - 4");
  return zp;
}

AdmissibilityReport strebel_admissible(const MetricRibbonGraph& mg) {
  AdmissibilityReport report;
  const auto validation = validate(mg.graph);
  if (!validation.ok()) {
    report.reasons = validation.violations;
    return report;
  }
  if (mg.graph.half_edge_count == 0) {
    report.reasons.push_back("empty graph");
    return report;
  }
  if (!is_connected(mg.graph)) report.reasons.push_back("disconnected");
  for (const auto& [vertex, valency] : vertex_valencies(mg.graph))
    if (valency < 3)
      report.reasons.push_back("vertex " + std::to_string(vertex) + ": valency " + std::to_string(valency) + " < 3");
  const auto edges = edge_list(mg.graph);
  if (mg.lengths.size() != edges.size()) {
    report.reasons.push_back("length count differs from edge count");
  } else {
    for (size_t e = 0; e < mg.lengths.size(); ++e)
      if (mg.lengths[e] <= 0) report.reasons.push_back("edge " + std::to_string(e) + ": non-positive length");
  }
  report.admissible = report.reasons.empty();
  return report;
}

MetricRibbonGraph relabel_metric(const MetricRibbonGraph& mg, const std::vector<int>& perm) {
  require_metric(mg);
  MetricRibbonGraph out;
  out.graph = relabel(mg.graph, perm);
  const auto old_edges = edge_list(mg.graph);
  const auto new_index = edge_index_by_halfedge(out.graph);
  out.lengths.assign(old_edges.size(), Rational(0));
  for (size_t e = 0; e < old_edges.size(); ++e) out.lengths[new_index[perm[old_edges[e].first]]] = mg.lengths[e];
  return out;
}

}  // namespace strebel
