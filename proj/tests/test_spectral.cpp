#include "strebel/spectral.hpp"

#include "strebel/construct.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace strebel;

TEST_CASE("tangent graph: both loop signs +1, cover falls apart") {
  const auto mg = testing::tangent_graph(1, 1);
  const auto cover = degeneracy_check(mg);
  CHECK(cover.branch_vertices.empty());
  CHECK(cover.degenerate);
  CHECK(cover.component_count == 2);
  REQUIRE(cover.edge_signs.size() == 2);
  CHECK(cover.edge_signs.at(0) == 1);
  CHECK(cover.edge_signs.at(1) == 1);
}

TEST_CASE("theta graph: odd valency short-circuits to a connected cover") {
  const auto mg = testing::theta_graph(1, 1, 1);
  const auto cover = degeneracy_check(mg);
  CHECK(cover.branch_vertices == std::vector<int>{0, 1});
  CHECK_FALSE(cover.degenerate);
  CHECK(cover.component_count == 1);
  CHECK(cover.edge_signs.empty());
}

TEST_CASE("interleaved rose: loops carry holonomy -1, cover stays connected") {
  // valency 4 but genus 1; admissible and even, with both edge signs -1
  const auto mg = testing::interleaved_rose(1, Rational(1, 3));
  const auto cover = degeneracy_check(mg);
  CHECK(cover.branch_vertices.empty());
  CHECK_FALSE(cover.degenerate);
  CHECK(cover.component_count == 1);
  CHECK(cover.edge_signs.at(0) == -1);
  CHECK(cover.edge_signs.at(1) == -1);
  CHECK(cycle_holonomy(mg, {0}) == -1);
  CHECK(cycle_holonomy(mg, {1}) == -1);
  CHECK(cycle_holonomy(mg, {0, 1, 0, 1}) == 1);
}

TEST_CASE("loops of the tangent graph have trivial holonomy") {
  const auto mg = testing::tangent_graph(2, 5);
  CHECK(cycle_holonomy(mg, {0}) == 1);
  CHECK(cycle_holonomy(mg, {1}) == 1);
}

TEST_CASE("face walks of even admissible graphs always multiply to +1") {
  for (const auto& mg : {testing::tangent_graph(1, 2), testing::interleaved_rose(1, 1)}) {
    const auto edge_of = edge_index_by_halfedge(mg.graph);
    for (const auto& face : face_cycles(mg.graph)) {
      std::vector<int> walk;
      for (int h : face.walk) walk.push_back(edge_of[h]);
      CHECK(cycle_holonomy(mg, walk) == 1);
    }
  }
}

TEST_CASE("holonomy input validation") {
  const auto theta = testing::theta_graph(1, 1, 1);
  CHECK_THROWS_WITH_AS(cycle_holonomy(theta, {0}), doctest::Contains("branch"), std::invalid_argument);
  const auto rose = testing::interleaved_rose(1, 1);
  CHECK_THROWS_AS(cycle_holonomy(rose, std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_holonomy(rose, {7}), std::invalid_argument);
  // open walk: one of four parallel edges between two valency-4 vertices
  MetricRibbonGraph quad;
  quad.graph.half_edge_count = 8;
  quad.graph.sigma = {2, 3, 4, 5, 6, 7, 0, 1};
  quad.graph.alpha = {1, 0, 3, 2, 5, 4, 7, 6};
  quad.lengths.assign(4, Rational(1));
  CHECK_THROWS_WITH_AS(cycle_holonomy(quad, {0}), doctest::Contains("closed"), std::invalid_argument);
  CHECK(cycle_holonomy(quad, {0, 1}) == 1);  // two parallel edges close up
}

TEST_CASE("gauge rotation flips non-loop edges at the vertex, loops stay") {
  // loops carry both ends through the rotation, so their sign is gauge-fixed
  const auto rose = testing::interleaved_rose(2, 3);
  const auto base = detail::edge_signs_with_gauge(rose, {0});
  const auto flipped = detail::edge_signs_with_gauge(rose, {1});
  for (const auto& [edge, sign] : base) CHECK(flipped.at(edge) == sign);

  // four parallel edges between two valency-4 vertices: a gauge step at one
  // vertex flips every incident sign, holonomies of closed walks persist
  MetricRibbonGraph quad;
  quad.graph.half_edge_count = 8;
  quad.graph.sigma = {2, 3, 4, 5, 6, 7, 0, 1};
  quad.graph.alpha = {1, 0, 3, 2, 5, 4, 7, 6};
  quad.lengths.assign(4, Rational(1));
  const auto q_base = detail::edge_signs_with_gauge(quad, {0, 0});
  const auto q_flip = detail::edge_signs_with_gauge(quad, {1, 0});
  for (const auto& [edge, sign] : q_base) CHECK(q_flip.at(edge) == -sign);
  for (int first = 0; first < 4; ++first)
    for (int second = first + 1; second < 4; ++second)
      CHECK(q_base.at(first) * q_base.at(second) == q_flip.at(first) * q_flip.at(second));
}

TEST_CASE("degeneracy verdict is relabeling invariant") {
  std::mt19937_64 rng(17);
  for (const auto& mg : {testing::tangent_graph(1, 1), testing::interleaved_rose(1, 2)}) {
    const auto base = degeneracy_check(mg);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> perm(mg.graph.half_edge_count);
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto cover = degeneracy_check(relabel_metric(mg, perm));
      CHECK(cover.degenerate == base.degenerate);
      CHECK(cover.component_count == base.component_count);
    }
  }
}

TEST_CASE("degeneracy needs an admissible graph") {
  CHECK_THROWS_AS(degeneracy_check(testing::loop_graph(1)), std::invalid_argument);
}
