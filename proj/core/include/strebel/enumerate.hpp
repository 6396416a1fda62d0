#pragma once

#include "strebel/ribbon.hpp"

namespace strebel {

// Brute-force test oracle: all connected rotation systems on 2*edge_count
// half-edges without valency-1 vertices (a fixed point of sigma would be a
// simple pole of the differential, which the setting excludes), one
// representative per isomorphism class. Isomorphism is relabeling commuting
// with sigma and alpha; the representative is the lexicographically smallest
// (sigma, alpha) image over all relabelings, and the output is sorted by it.
// edge_count must lie in 1..4.
std::vector<RibbonGraph> enumerate_small(int edge_count);

}  // namespace strebel
