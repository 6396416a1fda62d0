#pragma once

#include "strebel/rational.hpp"
#include "strebel/ribbon.hpp"

#include <vector>

namespace strebel {

// A ribbon graph with one exact positive rational length per edge, indexed
// by edge id. Lengths are stored in normalized units (geometric length over
// 2*pi), so a face perimeter equals the residue at the pole inside it.
struct MetricRibbonGraph {
  RibbonGraph graph;
  std::vector<Rational> lengths;
};

struct ResidueVector {
  std::vector<Rational> entries;  // indexed by face id
  int genus = 0;
};

struct ZeroPartition {
  std::vector<int> parts;  // valency - 2 per vertex, vertex-id order
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<std::string> reasons;
};

// Lengths present for every edge and strictly positive; graph valid.
void require_metric(const MetricRibbonGraph& mg);

// Face perimeters as exact rationals (an edge a walk traverses twice counts
// twice). Requires a valid connected graph.
ResidueVector residue_vector(const MetricRibbonGraph& mg);

// Requires every valency >= 3; postcondition sum = 2n + 4g - 4 is asserted.
ZeroPartition zero_partition(const MetricRibbonGraph& mg);

// Connected, min valency >= 3, all lengths positive.
AdmissibilityReport strebel_admissible(const MetricRibbonGraph& mg);

MetricRibbonGraph relabel_metric(const MetricRibbonGraph& mg, const std::vector<int>& perm);

}  // namespace strebel
