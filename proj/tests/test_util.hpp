#pragma once

#include "strebel/metric.hpp"

#include <vector>

namespace strebel::testing {

// Hand-built fixtures, independent of the constructors module.

// Single loop: sigma and alpha both swap the two half-edges.
inline MetricRibbonGraph loop_graph(const Rational& length) {
  MetricRibbonGraph mg;
  mg.graph.half_edge_count = 2;
  mg.graph.sigma = {1, 0};
  mg.graph.alpha = {1, 0};
  mg.lengths = {length};
  return mg;
}

// Planar theta: rotations (0 2 4) and (1 5 3), edge pairs {0,1},{2,3},{4,5}.
// Faces pair the edges: {e0,e1}, {e0,e2}, {e1,e2}.
inline MetricRibbonGraph theta_graph(const Rational& e0, const Rational& e1, const Rational& e2) {
  MetricRibbonGraph mg;
  mg.graph.half_edge_count = 6;
  mg.graph.sigma = std::vector<int>(6, -1);
  auto cycle = [&](std::initializer_list<int> rot) {
    const std::vector<int> r(rot);
    for (size_t i = 0; i < r.size(); ++i) mg.graph.sigma[r[i]] = r[(i + 1) % r.size()];
  };
  cycle({0, 2, 4});
  cycle({1, 5, 3});
  mg.graph.alpha = {1, 0, 3, 2, 5, 4};
  mg.lengths = {e0, e1, e2};
  return mg;
}

// One vertex, two loops, rotation (0 1 2 3), pairs {0,1} and {2,3}: the
// non-interleaved (planar, 3 faces) double loop.
inline MetricRibbonGraph tangent_graph(const Rational& loop1, const Rational& loop2) {
  MetricRibbonGraph mg;
  mg.graph.half_edge_count = 4;
  mg.graph.sigma = {1, 2, 3, 0};
  mg.graph.alpha = {1, 0, 3, 2};
  mg.lengths = {loop1, loop2};
  return mg;
}

// One vertex, two loops interleaved: pairs {0,2} and {1,3}: torus, 1 face.
inline MetricRibbonGraph interleaved_rose(const Rational& loop1, const Rational& loop2) {
  MetricRibbonGraph mg;
  mg.graph.half_edge_count = 4;
  mg.graph.sigma = {1, 2, 3, 0};
  mg.graph.alpha = {2, 3, 0, 1};
  mg.lengths = {loop1, loop2};
  return mg;
}

// Two loops joined by a bridge: rotations (0 1 4) and (2 3 5), pairs
// {0,1},{2,3},{4,5}. Faces: loop1, loop2, loop1+loop2+2*bridge.
inline MetricRibbonGraph dumbbell_graph(const Rational& loop1, const Rational& loop2, const Rational& bridge) {
  MetricRibbonGraph mg;
  mg.graph.half_edge_count = 6;
  mg.graph.sigma = std::vector<int>(6, -1);
  auto cycle = [&](std::initializer_list<int> rot) {
    const std::vector<int> r(rot);
    for (size_t i = 0; i < r.size(); ++i) mg.graph.sigma[r[i]] = r[(i + 1) % r.size()];
  };
  cycle({0, 1, 4});
  cycle({2, 3, 5});
  mg.graph.alpha = {1, 0, 3, 2, 5, 4};
  mg.lengths = {loop1, loop2, bridge};
  return mg;
}

}  // namespace strebel::testing
