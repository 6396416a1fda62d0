#include "strebel/ribbon.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace strebel;

TEST_CASE("loop graph is the smallest legal rotation system") {
  const auto mg = testing::loop_graph(1);
  CHECK(validate(mg.graph).ok());
  const auto faces = face_cycles(mg.graph);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].walk.size() == 1);
  CHECK(faces[1].walk.size() == 1);
  CHECK(genus(mg.graph) == 0);
  const auto valencies = vertex_valencies(mg.graph);
  REQUIRE(valencies.size() == 1);
  CHECK(valencies.at(0) == 2);
}

TEST_CASE("validation reports the named violations") {
  RibbonGraph g;
  g.half_edge_count = 2;
  g.sigma = {1, 0};
  g.alpha = {0, 1};  // fixed points
  auto report = validate(g);
  REQUIRE_FALSE(report.ok());
  CHECK(report.joined().find("alpha not fixed-point-free") != std::string::npos);

  g.sigma = {1, 1};  // duplicate image
  g.alpha = {1, 0};
  report = validate(g);
  REQUIRE_FALSE(report.ok());
  CHECK(report.joined().find("sigma not a permutation") != std::string::npos);

  g.sigma = {1, 0};
  g.alpha = {1, 0};
  CHECK(validate(g).ok());
}

TEST_CASE("interleaved rose closes into a torus with a single face") {
  const auto mg = testing::interleaved_rose(1, 1);
  const auto faces = face_cycles(mg.graph);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].walk.size() == 4);
  CHECK(genus(mg.graph) == 1);
}

TEST_CASE("planar theta has three faces of walk length two") {
  const auto mg = testing::theta_graph(1, 1, 1);
  const auto faces = face_cycles(mg.graph);
  REQUIRE(faces.size() == 3);
  for (const auto& f : faces) CHECK(f.walk.size() == 2);
  CHECK(genus(mg.graph) == 0);
  for (const auto& [v, valency] : vertex_valencies(mg.graph)) CHECK(valency == 3);
}

TEST_CASE("tangent rose: one vertex of valency four") {
  const auto mg = testing::tangent_graph(1, 1);
  const auto valencies = vertex_valencies(mg.graph);
  REQUIRE(valencies.size() == 1);
  CHECK(valencies.at(0) == 4);
  CHECK(face_cycles(mg.graph).size() == 3);
  CHECK(genus(mg.graph) == 0);
}

TEST_CASE("genus rejects disconnected graphs") {
  RibbonGraph g;
  g.half_edge_count = 4;
  g.sigma = {1, 0, 3, 2};
  g.alpha = {1, 0, 3, 2};  // two separate loops
  CHECK_FALSE(is_connected(g));
  CHECK_THROWS_WITH_AS(genus(g), doctest::Contains("disconnected"), std::invalid_argument);
}

TEST_CASE("every half-edge lies in exactly one cycle of each permutation") {
  const auto mg = testing::theta_graph(2, 3, 5);
  std::set<int> seen;
  for (const auto& cycle : vertex_cycles(mg.graph))
    for (int h : cycle) CHECK(seen.insert(h).second);
  CHECK(seen.size() == 6);
  seen.clear();
  for (const auto& face : face_cycles(mg.graph))
    for (int h : face.walk) CHECK(seen.insert(h).second);
  CHECK(seen.size() == 6);

  int valency_sum = 0;
  for (const auto& [v, valency] : vertex_valencies(mg.graph)) valency_sum += valency;
  CHECK(valency_sum == 2 * static_cast<int>(edge_list(mg.graph).size()));
}

TEST_CASE("face and vertex structure is invariant under relabeling") {
  const auto mg = testing::dumbbell_graph(1, 2, Rational(1, 2));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> perm(mg.graph.half_edge_count);
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto relabeled = relabel(mg.graph, perm);

    auto face_sizes = [](const RibbonGraph& g) {
      std::vector<size_t> sizes;
      for (const auto& f : face_cycles(g)) sizes.push_back(f.walk.size());
      std::sort(sizes.begin(), sizes.end());
      return sizes;
    };
    auto valency_multiset = [](const RibbonGraph& g) {
      std::vector<int> v;
      for (const auto& [vertex, valency] : vertex_valencies(g)) v.push_back(valency);
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(face_sizes(relabeled) == face_sizes(mg.graph));
    CHECK(valency_multiset(relabeled) == valency_multiset(mg.graph));
    CHECK(genus(relabeled) == genus(mg.graph));
  }
}
