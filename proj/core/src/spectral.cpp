#include "strebel/spectral.hpp"

#include <numeric>
#include <stdexcept>

namespace strebel {

namespace detail {

std::map<int, int> edge_signs_with_gauge(const MetricRibbonGraph& mg, const std::vector<int>& offsets) {
  const auto cycles = vertex_cycles(mg.graph);
  if (offsets.size() != cycles.size()) throw std::invalid_argument("one gauge offset per vertex required");

  // Parity of the position of each half-edge in its rotation, measured from
  // the gauge origin. Well defined on a cycle only because the valency is
  // even: advancing one step always flips the parity, including the wrap.
  std::vector<int> parity(mg.graph.half_edge_count, 0);
  for (size_t v = 0; v < cycles.size(); ++v) {
    const auto& cycle = cycles[v];
    if (cycle.size() % 2 != 0) throw std::invalid_argument("edge signs undefined at an odd-valency vertex");
    for (size_t i = 0; i < cycle.size(); ++i) parity[cycle[i]] = static_cast<int>((i + offsets[v]) % 2);
  }

  // The root branch alternates between consecutive sectors at a vertex and
  // reverses across an edge, hence the +1 in the exponent.
  std::map<int, int> signs;
  const auto edges = edge_list(mg.graph);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    signs[e] = ((parity[edges[e].first] + parity[edges[e].second] + 1) % 2 == 0) ? 1 : -1;
  return signs;
}

}  // namespace detail

SpectralCoverResult degeneracy_check(const MetricRibbonGraph& mg) {
  const auto report = strebel_admissible(mg);
  if (!report.admissible) {
    std::string why;
    for (const auto& r : report.reasons) why += (why.empty() ? "" : "; ") + r;
    throw std::invalid_argument("degeneracy check needs an admissible graph: " + why);
  }

  SpectralCoverResult result;
  result.half_edge_count = mg.graph.half_edge_count;
  const auto valencies = vertex_valencies(mg.graph);
  for (const auto& [vertex, valency] : valencies)
    if (valency % 2 != 0) result.branch_vertices.push_back(vertex);
  if (!result.branch_vertices.empty()) {
    // A branch point connects the two sheets, so the cover is connected.
    result.component_count = 1;
    result.degenerate = false;
    return result;
  }

  result.edge_signs = detail::edge_signs_with_gauge(mg, std::vector<int>(valencies.size(), 0));

  // Doubled graph on (vertex, sheet) nodes; a -1 edge crosses sheets.
  std::vector<int> vertex_slot(mg.graph.half_edge_count, -1);
  int slot = 0;
  for (const auto& [vertex, valency] : valencies) {
    (void)valency;
    vertex_slot[vertex] = slot++;
  }
  const auto cycles = vertex_cycles(mg.graph);
  std::vector<int> slot_of_halfedge(mg.graph.half_edge_count, -1);
  for (const auto& cycle : cycles)
    for (int h : cycle) slot_of_halfedge[h] = vertex_slot[cycle.front()];

  std::vector<int> parent(2 * slot);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  const auto edges = edge_list(mg.graph);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const int u = slot_of_halfedge[edges[e].first];
    const int v = slot_of_halfedge[edges[e].second];
    if (result.edge_signs.at(e) == 1) {
      unite(2 * u, 2 * v);
      unite(2 * u + 1, 2 * v + 1);
    } else {
      unite(2 * u, 2 * v + 1);
      unite(2 * u + 1, 2 * v);
    }
  }
  int components = 0;
  for (int node = 0; node < 2 * slot; ++node)
    if (find(node) == node) ++components;
  if (components != 1 && components != 2) throw std::logic_error("doubled graph of a connected graph must have 1 or 2 components");
  result.component_count = components;
  result.degenerate = (components == 2);

  // Hard correctness check of the sign convention: the root monodromy
  // around a double pole is trivial, so every face walk multiplies to +1.
  const auto edge_of = edge_index_by_halfedge(mg.graph);
  for (const auto& face : face_cycles(mg.graph)) {
    int product = 1;
    for (int h : face.walk) product *= result.edge_signs.at(edge_of[h]);
    if (product != 1) throw std::logic_error("face-walk holonomy is not +1; sign convention broken");
  }
  return result;
}

int cycle_holonomy(const MetricRibbonGraph& mg, const std::vector<int>& edge_walk) {
  const auto cover = degeneracy_check(mg);
  if (!cover.branch_vertices.empty()) throw std::invalid_argument("holonomy undefined through branch points");
  if (edge_walk.empty()) throw std::invalid_argument("empty walk");

  const auto edges = edge_list(mg.graph);
  const auto cycles = vertex_cycles(mg.graph);
  std::vector<int> vertex_of(mg.graph.half_edge_count, -1);
  for (const auto& cycle : cycles)
    for (int h : cycle) vertex_of[h] = cycle.front();

  // A closed walk must admit an orientation of each step so that
  // consecutive steps share a vertex and the ends match up. Try both
  // orientations per step by depth-first search; walks are short.
  const int steps = static_cast<int>(edge_walk.size());
  for (int e : edge_walk)
    if (e < 0 || e >= static_cast<int>(edges.size())) throw std::invalid_argument("edge id out of range");

  auto ends = [&](int e) {
    return std::pair<int, int>{vertex_of[edges[e].first], vertex_of[edges[e].second]};
  };
  bool closed = false;
  auto dfs = [&](auto&& self, int i, int at, int start) -> bool {
    if (i == steps) return at == start;
    const auto [u, v] = ends(edge_walk[i]);
    if (u == at && self(self, i + 1, v, start)) return true;
    if (v == at && self(self, i + 1, u, start)) return true;
    return false;
  };
  const auto [u0, v0] = ends(edge_walk[0]);
  for (int start : {u0, v0}) {
    if (dfs(dfs, 0, start, start)) {
      closed = true;
      break;
    }
  }
  if (!closed) throw std::invalid_argument("walk is not a closed walk in the graph");

  int product = 1;
  for (int e : edge_walk) product *= cover.edge_signs.at(e);
  return product;
}

}  // namespace strebel
