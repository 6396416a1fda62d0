#pragma once

#include "strebel/construct.hpp"
#include "strebel/rational.hpp"

#include <array>
#include <complex>
#include <vector>

namespace strebel {

// Everything in this header works in doubles; the exact layers never
// include it. The differential with double poles at 0, 1, infinity and
// residues (a1, a2, a3) is -P(z)/(z^2 (z-1)^2) dz^2 with
// P(z) = a3^2 z^2 + (a2^2 - a1^2 - a3^2) z + a1^2.
struct ThreePoleDifferential {
  double a1 = 0, a2 = 0, a3 = 0;
  double A = 0, B = 0, C = 0;  // P(z) = A z^2 + B z + C
  std::array<std::complex<double>, 2> zeros;
  double discriminant = 0;
};

ThreePoleDifferential q_poly(double a1, double a2, double a3);

struct MonodromyResult {
  int pole = 0;  // 0 -> z=0, 1 -> z=1, 2 -> infinity
  std::complex<double> multiplier;
  double unit_deviation = 0;  // | |multiplier| - 1 |
  double phase = 0;           // arg(multiplier) / 2*pi in (-1/2, 1/2]
  double phase_error = 0;     // circular distance to +-a_j mod 1
};

// Continues sqrt(-q) around a circle of the given radius (in the w = 1/z
// chart for the pole at infinity), multiplier = exp of the contour
// integral via the periodic trapezoid rule. The circle must stay clear of
// the zeros and the other poles.
MonodromyResult pole_monodromy_numeric(const ThreePoleDifferential& d, int pole, double radius, int steps);

struct CurvatureSample {
  std::complex<double> point;
  double K = 0;
  double error = 0;  // |K - 1|
};

// Gaussian curvature of the pulled-back round metric, probed by a central
// 5-point Laplacian of log rho with step h. Sample points must keep a
// margin of at least 10h from every zero and pole.
std::vector<CurvatureSample> curvature_probe(const ThreePoleDifferential& d,
                                             const std::vector<std::complex<double>>& samples, double h);

// Exact discriminant sign against the combinatorial class, plus a numeric
// root-structure check (conjugate pair / double root / real pair).
bool classify_crosscheck(const Rational& a1, const Rational& a2, const Rational& a3);

}  // namespace strebel
