#include "strebel/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strebel {

std::string ValidationReport::joined() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate(const RibbonGraph& g) {
  ValidationReport report;
  const int n = g.half_edge_count;
  if (n < 0 || n % 2 != 0) report.violations.push_back("half-edge count must be even and non-negative");
  if (static_cast<int>(g.sigma.size()) != n) report.violations.push_back("sigma size differs from half-edge count");
  if (static_cast<int>(g.alpha.size()) != n) report.violations.push_back("alpha size differs from half-edge count");
  if (!report.ok()) return report;

  auto check_permutation = [&](const std::vector<int>& p, const char* name) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (p[i] < 0 || p[i] >= n) {
        report.violations.push_back(std::string(name) + " image out of range");
        return false;
      }
      if (seen[p[i]]) {
        report.violations.push_back(std::string(name) + " not a permutation");
        return false;
      }
      seen[p[i]] = 1;
    }
    return true;
  };

  check_permutation(g.sigma, "sigma");
  if (check_permutation(g.alpha, "alpha")) {
    for (int i = 0; i < n; ++i) {
      if (g.alpha[i] == i) {
        report.violations.push_back("alpha not fixed-point-free");
        break;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (g.alpha[g.alpha[i]] != i) {
        report.violations.push_back("alpha not an involution");
        break;
      }
    }
  }
  return report;
}

void require_valid(const RibbonGraph& g) {
  ValidationReport report = validate(g);
  if (!report.ok()) throw std::invalid_argument("invalid ribbon graph: " + report.joined());
}

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int h = start;
    do {
      seen[h] = 1;
      cycle.push_back(h);
      h = perm[h];
    } while (h != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;  // each cycle starts at its minimum because starts ascend
}

}  // namespace

std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g) {
  require_valid(g);
  return cycles_of(g.sigma);
}

std::map<int, int> vertex_valencies(const RibbonGraph& g) {
  std::map<int, int> valencies;
  for (const auto& cycle : vertex_cycles(g)) valencies[cycle.front()] = static_cast<int>(cycle.size());
  return valencies;
}

std::vector<std::pair<int, int>> edge_list(const RibbonGraph& g) {
  require_valid(g);
  std::vector<std::pair<int, int>> edges;
  for (int h = 0; h < g.half_edge_count; ++h)
    if (h < g.alpha[h]) edges.emplace_back(h, g.alpha[h]);
  return edges;  // ascending by first element by construction
}

std::vector<int> edge_index_by_halfedge(const RibbonGraph& g) {
  std::vector<int> index(g.half_edge_count, -1);
  auto edges = edge_list(g);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    index[edges[e].first] = e;
    index[edges[e].second] = e;
  }
  return index;
}

std::vector<FaceWalk> face_cycles(const RibbonGraph& g) {
  require_valid(g);
  std::vector<int> phi(g.half_edge_count);
  for (int h = 0; h < g.half_edge_count; ++h) phi[h] = g.sigma[g.alpha[h]];
  auto edge_of = edge_index_by_halfedge(g);

  std::vector<FaceWalk> faces;
  int face_id = 0;
  for (auto& cycle : cycles_of(phi)) {
    FaceWalk face;
    face.face_id = face_id++;
    face.walk = std::move(cycle);
    for (int h : face.walk) face.edge_multiplicity[edge_of[h]] += 1;
    faces.push_back(std::move(face));
  }
  return faces;
}

bool is_connected(const RibbonGraph& g) {
  require_valid(g);
  const int n = g.half_edge_count;
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> find_stack;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int h = 0; h < n; ++h) {
    unite(h, g.sigma[h]);
    unite(h, g.alpha[h]);
  }
  const int root = find(0);
  for (int h = 1; h < n; ++h)
    if (find(h) != root) return false;
  return true;
}

int genus(const RibbonGraph& g) {
  require_valid(g);
  if (!is_connected(g)) throw std::invalid_argument("genus defined per connected closed surface; graph disconnected");
  const int v = static_cast<int>(vertex_cycles(g).size());
  const int e = static_cast<int>(edge_list(g).size());
  const int f = static_cast<int>(face_cycles(g).size());
  const int chi = v - e + f;
  if (chi % 2 != 0 || chi > 2) throw std::logic_error("Euler characteristic out of range for a closed oriented surface");
  return (2 - chi) / 2;
}

RibbonGraph relabel(const RibbonGraph& g, const std::vector<int>& perm) {
  require_valid(g);
  if (static_cast<int>(perm.size()) != g.half_edge_count) throw std::invalid_argument("relabel permutation has wrong size");
  RibbonGraph out;
  out.half_edge_count = g.half_edge_count;
  out.sigma.assign(g.half_edge_count, -1);
  out.alpha.assign(g.half_edge_count, -1);
  for (int h = 0; h < g.half_edge_count; ++h) {
    out.sigma[perm[h]] = perm[g.sigma[h]];
    out.alpha[perm[h]] = perm[g.alpha[h]];
  }
  require_valid(out);
  return out;
}

}  // namespace strebel
