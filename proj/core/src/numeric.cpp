#include "strebel/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace strebel {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// 12-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 6> kGlNodes = {0.1252334085114689, 0.3678314989981802, 0.5873179542866175,
                                            0.7699026741943047, 0.9041172563704749, 0.9815606342467192};
constexpr std::array<double, 6> kGlWeights = {0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
                                              0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

// Square root continued from a previous value: picks the branch nearer to
// prev and insists the step is small enough to make the choice unambiguous.
Complex tracked_sqrt(Complex value, Complex prev) {
  Complex root = std::sqrt(value);
  if (std::abs(root - prev) > std::abs(root + prev)) root = -root;
  if (std::abs(root - prev) > 0.5 * std::abs(prev))
    throw std::runtime_error("branch tracking lost: step too coarse near a critical point");
  return root;
}

}  // namespace

ThreePoleDifferential q_poly(double a1, double a2, double a3) {
  if (a1 <= 0 || a2 <= 0 || a3 <= 0) throw std::invalid_argument("residues must be positive");
  ThreePoleDifferential d;
  d.a1 = a1;
  d.a2 = a2;
  d.a3 = a3;
  d.A = a3 * a3;
  d.B = a2 * a2 - a1 * a1 - a3 * a3;
  d.C = a1 * a1;
  d.discriminant = d.B * d.B - 4 * d.A * d.C;

  // Stable quadratic: avoid cancellation in the larger root.
  const Complex sq = std::sqrt(Complex(d.discriminant, 0.0));
  const Complex t = (d.B >= 0) ? (-d.B - sq) / 2.0 : (-d.B + sq) / 2.0;
  if (std::abs(t) > 0) {
    d.zeros[0] = t / d.A;
    d.zeros[1] = d.C / t;
  } else {  // B == 0 and discriminant == 0 cannot happen since C > 0
    d.zeros[0] = d.zeros[1] = -d.B / (2 * d.A);
  }
  return d;
}

namespace {

std::vector<Complex> critical_points_z(const ThreePoleDifferential& d) {
  return {Complex(0, 0), Complex(1, 0), d.zeros[0], d.zeros[1]};
}

// Evaluate sqrt(N)/(den) along a straight segment with 12-point Gauss
// panels, branch chained through the node sequence. `branch` carries the
// running square-root value in and out.
Complex integrate_segment(const std::function<Complex(Complex)>& num_poly,
                          const std::function<Complex(Complex)>& denom, Complex from, Complex to,
                          const std::vector<Complex>& avoid, Complex& branch) {
  // Panels shrink near critical points so the branch never jumps.
  std::vector<std::pair<Complex, Complex>> stack{{from, to}};
  std::vector<std::pair<Complex, Complex>> panels;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const Complex mid = (a + b) / 2.0;
    double dist = 1e300;
    for (const auto& c : avoid) dist = std::min(dist, std::abs(mid - c));
    const double len = std::abs(b - a);
    if (len > 0.5 || len > 0.4 * dist) {
      if (len < 1e-13) throw std::runtime_error("integration path pinched against a critical point");
      stack.push_back({mid, b});
      stack.push_back({a, mid});
    } else {
      panels.push_back({a, b});
    }
  }
  // Depth-first splitting emits panels from `from` to `to` in order only if
  // we sort; rebuild the chain by walking from `from`.
  std::sort(panels.begin(), panels.end(), [&](const auto& p, const auto& q) {
    return std::abs(p.first - from) < std::abs(q.first - from);
  });

  Complex total = 0;
  for (const auto& [a, b] : panels) {
    const Complex half = (b - a) / 2.0;
    const Complex mid = (a + b) / 2.0;
    // chain the branch to the panel start first
    branch = tracked_sqrt(num_poly(a), branch);
    std::array<Complex, 12> nodes;
    for (int i = 0; i < 6; ++i) {
      nodes[i] = mid - half * kGlNodes[5 - i];
      nodes[6 + i] = mid + half * kGlNodes[i];
    }
    Complex prev = branch;
    Complex sum = 0;
    for (int i = 0; i < 12; ++i) {
      const Complex root = tracked_sqrt(num_poly(nodes[i]), prev);
      prev = root;
      const double w = (i < 6) ? kGlWeights[5 - i] : kGlWeights[i - 6];
      sum += w * root / denom(nodes[i]);
    }
    total += sum * half;
    branch = tracked_sqrt(num_poly(b), prev);
  }
  return total;
}

}  // namespace

MonodromyResult pole_monodromy_numeric(const ThreePoleDifferential& d, int pole, double radius, int steps) {
  if (steps < 8) throw std::invalid_argument("need at least 8 quadrature steps");
  if (radius <= 0) throw std::invalid_argument("radius must be positive");
  if (pole < 0 || pole > 2) throw std::invalid_argument("pole must be 0, 1 or 2");

  // In the w = 1/z chart the numerator polynomial reverses its coefficients
  // and the leftover pole sits at w = 1; the center pole is always at the
  // chart origin.
  const bool at_infinity = (pole == 2);
  const double n2 = at_infinity ? d.C : d.A;
  const double n1 = d.B;
  const double n0 = at_infinity ? d.A : d.C;
  const double sign = at_infinity ? -1.0 : 1.0;
  const Complex center = (pole == 1) ? Complex(1, 0) : Complex(0, 0);
  const double residue = (pole == 0) ? d.a1 : (pole == 1) ? d.a2 : d.a3;

  std::vector<Complex> others;
  if (at_infinity) {
    others.push_back(Complex(1, 0));  // image of z = 1
    for (const auto& zero : {d.zeros[0], d.zeros[1]}) {
      if (std::abs(zero) < 1e-300) throw std::runtime_error("zero collides with the chart");
      others.push_back(1.0 / zero);
    }
  } else {
    others.push_back(pole == 0 ? Complex(1, 0) : Complex(0, 0));
    others.push_back(d.zeros[0]);
    others.push_back(d.zeros[1]);
  }
  for (const auto& c : others)
    if (std::abs(c - center) < 1.05 * radius) throw std::runtime_error("contour too close to critical point");

  auto num = [&](Complex u) { return (n2 * u + n1) * u + n0; };
  // Finite chart: sqrt(P(z))/(z(z-1)); infinity chart: -sqrt(Q(w))/(w(1-w)).
  auto den_finite = [&](Complex z) { return z * (z - 1.0); };
  auto den_inf = [&](Complex w) { return w * (1.0 - w); };

  Complex integral = 0;
  Complex first;
  Complex prev;
  const double dtheta = 2 * kPi / steps;
  for (int k = 0; k <= steps; ++k) {
    const double theta = dtheta * k;
    const Complex u = center + std::polar(radius, theta);
    Complex root = std::sqrt(num(u));
    if (k == 0) {
      first = root;
    } else {
      root = tracked_sqrt(num(u), prev);
    }
    prev = root;
    if (k == steps) {
      if (std::abs(root - first) > 0.5 * std::abs(first))
        throw std::runtime_error("branch did not close up; contour encloses a zero");
      break;
    }
    const Complex dz = Complex(0, 1) * std::polar(radius, theta);
    const Complex f = sign * root / (at_infinity ? den_inf(u) : den_finite(u));
    integral += f * dz * dtheta;
  }

  MonodromyResult result;
  result.pole = pole;
  result.multiplier = std::exp(integral);
  result.unit_deviation = std::abs(std::abs(result.multiplier) - 1.0);
  result.phase = std::arg(result.multiplier) / (2 * kPi);
  auto circ = [](double x) {
    const double frac = x - std::floor(x);
    return std::min(frac, 1.0 - frac);
  };
  result.phase_error = std::min(circ(result.phase - residue), circ(result.phase + residue));
  return result;
}

std::vector<CurvatureSample> curvature_probe(const ThreePoleDifferential& d,
                                             const std::vector<std::complex<double>>& samples, double h) {
  if (h <= 0) throw std::invalid_argument("finite-difference step must be positive");
  const auto critical = critical_points_z(d);

  auto num = [&](Complex z) { return (d.A * z + d.B) * z + d.C; };
  auto den = [&](Complex z) { return z * (z - 1.0); };

  // One shared base point per call; any locally consistent branch gives the
  // same metric density, so the only care needed is path safety.
  const std::vector<Complex> bases = {{-2.0, -2.0}, {-2.0, 2.0}, {3.0, 2.0}, {3.0, -2.0}, {0.5, 3.5}, {0.5, -3.5}};

  std::vector<CurvatureSample> out;
  for (const Complex z0 : samples) {
    double margin = 1e300;
    for (const auto& c : critical) margin = std::min(margin, std::abs(z0 - c));
    if (margin < 10 * h) throw std::runtime_error("sample too close to a critical point");

    // Pick the base whose straight segment to z0 stays farthest from the
    // critical set.
    Complex base = bases[0];
    double best = -1;
    for (const Complex b : bases) {
      double worst = 1e300;
      for (const auto& c : critical) {
        // distance from c to segment [b, z0]
        const Complex ab = z0 - b;
        const double t = std::clamp(((c - b) / ab).real(), 0.0, 1.0);
        worst = std::min(worst, std::abs(b + t * ab - c));
      }
      if (worst > best) {
        best = worst;
        base = b;
      }
    }
    if (best < 20 * h) throw std::runtime_error("no safe integration path to the sample");

    Complex branch = std::sqrt(num(base));
    const Complex to_sample = integrate_segment(num, den, base, z0, critical, branch);
    const Complex branch_at_z0 = branch;

    // log rho = log|f| - log cosh(Re integral f); stencil legs re-use the
    // base integral so its quadrature error cancels in the Laplacian.
    auto log_cosh = [](double u) { return std::abs(u) + std::log1p(std::exp(-2 * std::abs(u))) - std::log(2.0); };
    auto log_rho_from = [&](Complex z, Complex leg_integral) {
      const double u = (to_sample + leg_integral).real();
      const double mod_f = std::abs(std::sqrt(num(z)) / den(z));  // modulus only, branch-free
      return std::log(mod_f) - log_cosh(u);
    };

    const std::array<Complex, 4> offsets = {Complex(h, 0), Complex(-h, 0), Complex(0, h), Complex(0, -h)};
    const double center_log_rho = log_rho_from(z0, Complex(0, 0));
    double laplacian = -4 * center_log_rho;
    for (const Complex off : offsets) {
      Complex leg_branch = branch_at_z0;
      const Complex leg = integrate_segment(num, den, z0, z0 + off, critical, leg_branch);
      laplacian += log_rho_from(z0 + off, leg);
    }
    laplacian /= h * h;

    const double u0 = to_sample.real();
    const double rho0 = std::abs(branch_at_z0 / den(z0)) / std::cosh(u0);
    CurvatureSample sample;
    sample.point = z0;
    sample.K = -laplacian / (rho0 * rho0);
    sample.error = std::abs(sample.K - 1.0);
    out.push_back(sample);
  }
  return out;
}

bool classify_crosscheck(const Rational& a1, const Rational& a2, const Rational& a3) {
  std::vector<Rational> sorted{a1, a2, a3};
  std::sort(sorted.begin(), sorted.end());
  const Rational s1 = sorted[0], s2 = sorted[1], s3 = sorted[2];

  const auto three = build_three_pole(a1, a2, a3);

  // disc(P) = -(s1+s2-s3)(s1-s2+s3)(-s1+s2+s3)(s1+s2+s3) exactly.
  const Rational disc = -(s1 + s2 - s3) * (s1 - s2 + s3) * (-s1 + s2 + s3) * (s1 + s2 + s3);
  const int disc_sign = disc < 0 ? -1 : (disc == 0 ? 0 : 1);
  const int expected_sign = three.cls == ThreePoleClass::Theta ? -1 : (three.cls == ThreePoleClass::Tangent ? 0 : 1);
  if (disc_sign != expected_sign) return false;

  // The exact route above decides; the double route must agree within
  // rounding (near-tangent prescriptions cannot resolve the root splitting
  // in doubles, so the sign comparison gets a tolerance band).
  const auto d = q_poly(to_double(s1), to_double(s2), to_double(s3));
  const double tol = 1e-12 * (std::abs(d.B * d.B) + std::abs(4 * d.A * d.C));
  const double root_scale = 1.0 + std::max(std::abs(d.zeros[0]), std::abs(d.zeros[1]));
  switch (three.cls) {
    case ThreePoleClass::Tangent:
      return std::abs(d.discriminant) <= tol && std::abs(d.zeros[0] - d.zeros[1]) <= 1e-6 * root_scale;
    case ThreePoleClass::Theta:
      // conjugate pair
      return d.discriminant < tol && std::abs(d.zeros[0] - std::conj(d.zeros[1])) <= 1e-9 * root_scale;
    case ThreePoleClass::Dumbbell:
      return d.discriminant > -tol && std::abs(d.zeros[0].imag()) <= 1e-9 * root_scale &&
             std::abs(d.zeros[1].imag()) <= 1e-9 * root_scale;
  }
  return false;
}

}  // namespace strebel
