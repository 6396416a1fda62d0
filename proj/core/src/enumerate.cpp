#include "strebel/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace strebel {

namespace {

using Perm = std::vector<int>;

Perm conjugate(const Perm& p, const Perm& relab) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[relab[i]] = relab[p[i]];
  return out;
}

bool connected_under(const Perm& sigma, const Perm& alpha) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int h = stack.back();
    stack.pop_back();
    for (int next : {sigma[h], alpha[h]}) {
      if (!seen[next]) {
        seen[next] = 1;
        ++visited;
        stack.push_back(next);
      }
    }
  }
  return visited == n;
}

// Relabelings fixing the standard pairing alpha0 (2k <-> 2k+1): permute the
// E pairs and optionally swap inside each pair. Enough for de-duplication;
// the published representative is recomputed over the full symmetric group.
std::vector<Perm> alpha_stabilizer(int edges) {
  const int n = 2 * edges;
  std::vector<int> pair_order(edges);
  std::iota(pair_order.begin(), pair_order.end(), 0);
  std::vector<Perm> result;
  do {
    for (int mask = 0; mask < (1 << edges); ++mask) {
      Perm p(n);
      for (int k = 0; k < edges; ++k) {
        const int flip = (mask >> k) & 1;
        p[2 * k] = 2 * pair_order[k] + flip;
        p[2 * k + 1] = 2 * pair_order[k] + (1 - flip);
      }
      result.push_back(std::move(p));
    }
  } while (std::next_permutation(pair_order.begin(), pair_order.end()));
  return result;
}

std::pair<Perm, Perm> full_lex_min(const Perm& sigma, const Perm& alpha) {
  const int n = static_cast<int>(sigma.size());
  Perm relab(n);
  std::iota(relab.begin(), relab.end(), 0);
  Perm best_sigma = sigma, best_alpha = alpha;
  do {
    Perm s = conjugate(sigma, relab);
    if (s > best_sigma) continue;
    Perm a = conjugate(alpha, relab);
    if (s < best_sigma || (s == best_sigma && a < best_alpha)) {
      best_sigma = std::move(s);
      best_alpha = std::move(a);
    }
  } while (std::next_permutation(relab.begin(), relab.end()));
  return {best_sigma, best_alpha};
}

}  // namespace

std::vector<RibbonGraph> enumerate_small(int edge_count) {
  if (edge_count < 1 || edge_count > 4) throw std::invalid_argument("enumerate_small supports 1..4 edges");
  const int n = 2 * edge_count;

  Perm alpha0(n);
  for (int k = 0; k < edge_count; ++k) {
    alpha0[2 * k] = 2 * k + 1;
    alpha0[2 * k + 1] = 2 * k;
  }
  const auto stabilizer = alpha_stabilizer(edge_count);

  std::set<Perm> classes;                  // keyed by stabilizer-minimal sigma
  std::vector<Perm> witnesses;
  Perm sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool fixed_point = false;
    for (int h = 0; h < n; ++h)
      if (sigma[h] == h) {
        fixed_point = true;
        break;
      }
    if (fixed_point) continue;
    if (!connected_under(sigma, alpha0)) continue;

    Perm key = sigma;
    for (const auto& relab : stabilizer) key = std::min(key, conjugate(sigma, relab));
    if (classes.insert(key).second) witnesses.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<std::pair<Perm, Perm>> reps;
  reps.reserve(witnesses.size());
  for (const auto& w : witnesses) reps.push_back(full_lex_min(w, alpha0));
  std::sort(reps.begin(), reps.end());

  std::vector<RibbonGraph> out;
  out.reserve(reps.size());
  for (auto& [s, a] : reps) {
    RibbonGraph g;
    g.half_edge_count = n;
    g.sigma = std::move(s);
    g.alpha = std::move(a);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace strebel
