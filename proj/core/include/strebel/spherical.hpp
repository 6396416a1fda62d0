#pragma once

#include "strebel/metric.hpp"
#include "strebel/spectral.hpp"

#include <string>
#include <vector>

namespace strebel {

// Cone data of the curvature-one metric an admissible graph induces: a pole
// of residue a contributes a cone angle 2*pi*a at its face, a zero of order
// m a cone angle (2+m)*pi at its vertex. Angles are kept as exact rational
// multiples of pi.
struct PoleSite {
  int face = 0;
  Rational residue;
  Rational weight;         // residue - 1
  Rational angle_over_pi;  // 2 * residue
};

struct ZeroSite {
  int vertex = 0;
  int order = 0;
  Rational weight;         // order / 2
  Rational angle_over_pi;  // order + 2
};

struct SphericalDivisorData {
  std::vector<PoleSite> pole_sites;
  std::vector<ZeroSite> zero_sites;
  Rational degree;        // sum of all weights
  Rational gauss_bonnet;  // (2 - 2g) + degree, equals the residue sum
  int genus = 0;
};

SphericalDivisorData divisor_and_angles(const MetricRibbonGraph& mg);

// Returns (2 - 2g) + degree and asserts it equals the residue sum and is
// positive; a failure is an internal inconsistency, not a user error.
Rational gauss_bonnet_check(const SphericalDivisorData& data, int genus);

enum class Reducibility { Reducible, Irreducible, Unknown };

struct ReducibilityVerdict {
  Reducibility tag = Reducibility::Unknown;
  std::string rule;  // names the rule that fired; empty for Unknown
};

const char* to_string(Reducibility tag);

// R1: a degenerate differential yields a one-parameter family of reducible
//     metrics.
// R2: on the sphere with more than two cone points, reducibility forces a
//     cone angle in 2*pi*Z_{>1}; no integral residue and no even zero order
//     rules that out.
// R3: three integral residues with two simple zeroes give monodromy Z2,
//     hence reducible.
// Anything else is honestly Unknown.
ReducibilityVerdict reducibility_classify(const MetricRibbonGraph& mg, const SpectralCoverResult& cover);

}  // namespace strebel
