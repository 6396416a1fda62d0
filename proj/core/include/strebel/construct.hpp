#pragma once

#include "strebel/metric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace strebel {

// The three planar graphs realizing a three-pole prescription, keyed by the
// sign of a1 + a2 - a3 on the ascending-sorted inputs.
enum class ThreePoleClass { Theta, Tangent, Dumbbell };

const char* to_string(ThreePoleClass cls);

struct SurgeryStep {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Rational> residues;  // perimeters after the step, user label order where final
};

struct SurgeryTrace {
  std::vector<SurgeryStep> steps;
};

struct ThreePoleResult {
  MetricRibbonGraph graph;  // faces relabeled to the caller's input order
  ThreePoleClass cls;
  SurgeryTrace trace;
};

struct BuildResult {
  MetricRibbonGraph graph;  // face id j carries the caller's residue a_{j+1}
  SurgeryTrace trace;
};

// Theta: two trivalent vertices, edge lengths (a1+a2-a3)/2, (a1+a3-a2)/2,
// (a2+a3-a1)/2. Tangent: one valency-4 vertex, loops a1 and a2. Dumbbell:
// loops a1 and a2 joined by a segment of length (a3-a1-a2)/2. Inputs may be
// unsorted; face labels follow the caller's order.
ThreePoleResult build_three_pole(const Rational& a1, const Rational& a2, const Rational& a3);

// Genus-0 trivalent graph with n faces of prescribed perimeters (simple
// zeroes only): base three-pole graph plus a chain of circles joined by
// short connector segments. Requires n >= 3 and, for n = 3, a1 + a2 != a3
// after ascending sort (that prescription has no trivalent realization).
BuildResult build_sphere_simple(const std::vector<Rational>& alpha);

// One perimeter P: the two-vertex one-face torus graph, edge lengths P/6.
// Two perimeters: two latitude circles joined by two meridian arcs, faces
// exactly (r1, r2). Face labels follow input order.
BuildResult build_torus_gadget(const std::vector<Rational>& perimeters);

// Connected-sum a one-face torus gadget of perimeter eta into the given face
// through a bridge of length beta: genus rises by one, the face count and
// all other perimeters are unchanged, the target perimeter grows by exactly
// eta + 2*beta, and trivalence is preserved.
MetricRibbonGraph bridge_handle(const MetricRibbonGraph& mg, int face_id, const Rational& eta, const Rational& beta);

// Trivalent genus-g graph with residue vector alpha (exact). Dispatch:
// genus 0 via the sphere chain, n <= 2 via torus gadgets, otherwise sphere
// graph on a shrunk first entry plus g bridge_handle calls into face 0.
BuildResult build(int genus, const std::vector<Rational>& alpha);

}  // namespace strebel
