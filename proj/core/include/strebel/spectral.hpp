#pragma once

#include "strebel/metric.hpp"

#include <map>
#include <vector>

namespace strebel {

// Combinatorial shadow of the branched double cover on which the square
// root of the differential becomes single-valued. Odd-valency vertices are
// branch points and force a connected cover; otherwise a Z2 sign per edge
// records how the root branch propagates, and the differential is globally
// a square exactly when the doubled graph falls apart into two components.
struct SpectralCoverResult {
  std::vector<int> branch_vertices;  // odd-valency vertex ids
  std::map<int, int> edge_signs;     // edge id -> +1/-1; empty when branched
  int component_count = 1;           // of the doubled graph (1 or 2)
  bool degenerate = false;
  int half_edge_count = 0;  // fingerprint for cross-module consistency
};

SpectralCoverResult degeneracy_check(const MetricRibbonGraph& mg);

// Product of edge signs along a closed edge walk (ids, multiplicities
// honored). Errors when the walk is open or when branch vertices exist.
int cycle_holonomy(const MetricRibbonGraph& mg, const std::vector<int>& edge_walk);

namespace detail {

// Edge signs with an explicit gauge: offsets[v] rotates where position 0
// sits in the sigma-cycle of vertex index v (vertex-id order). The default
// gauge puts position 0 at the smallest half-edge. Requires all valencies
// even. Exposed for the gauge-invariance tests.
std::map<int, int> edge_signs_with_gauge(const MetricRibbonGraph& mg, const std::vector<int>& offsets);

}  // namespace detail

}  // namespace strebel
