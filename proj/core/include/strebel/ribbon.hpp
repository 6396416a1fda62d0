#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace strebel {

// Rotation system on half-edges 0..2E-1. sigma advances counterclockwise
// around a vertex, alpha swaps the two half-edges of an edge. Faces are the
// cycles of phi = sigma∘alpha (alpha applied first). Vertices and faces are
// identified by the smallest half-edge in their cycle, so every report is
// deterministic under a fixed labeling.
struct RibbonGraph {
  int half_edge_count = 0;
  std::vector<int> sigma;  // image of i at position i
  std::vector<int> alpha;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

ValidationReport validate(const RibbonGraph& g);

// Throws std::invalid_argument carrying the report if the graph is invalid.
void require_valid(const RibbonGraph& g);

struct FaceWalk {
  int face_id = 0;
  std::vector<int> walk;                 // half-edges, starting at the smallest
  std::map<int, int> edge_multiplicity;  // edge id -> 1 or 2
};

// sigma-cycles, each starting at its smallest half-edge, sorted by that key.
std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g);

// vertex id (smallest half-edge of its sigma-cycle) -> valency
std::map<int, int> vertex_valencies(const RibbonGraph& g);

// alpha-orbits as (min, max) pairs ordered by their smaller half-edge; the
// position in this list is the edge id used everywhere (JSON, lengths, signs).
std::vector<std::pair<int, int>> edge_list(const RibbonGraph& g);
std::vector<int> edge_index_by_halfedge(const RibbonGraph& g);

std::vector<FaceWalk> face_cycles(const RibbonGraph& g);

bool is_connected(const RibbonGraph& g);

// g = (2 - V + E - F)/2 for a connected graph; throws on disconnected input.
int genus(const RibbonGraph& g);

// Conjugates sigma and alpha by perm (new label of h is perm[h]).
RibbonGraph relabel(const RibbonGraph& g, const std::vector<int>& perm);

}  // namespace strebel
