#include "strebel/spherical.hpp"

#include <stdexcept>

namespace strebel {

const char* to_string(Reducibility tag) {
  switch (tag) {
    case Reducibility::Reducible: return "Reducible";
    case Reducibility::Irreducible: return "Irreducible";
    case Reducibility::Unknown: return "Unknown";
  }
  return "?";
}

SphericalDivisorData divisor_and_angles(const MetricRibbonGraph& mg) {
  const auto report = strebel_admissible(mg);
  if (!report.admissible) {
    std::string why;
    for (const auto& r : report.reasons) why += (why.empty() ? "" : "; ") + r;
    throw std::invalid_argument("spherical data needs an admissible graph: " + why);
  }

  SphericalDivisorData data;
  const auto rv = residue_vector(mg);
  data.genus = rv.genus;
  for (int j = 0; j < static_cast<int>(rv.entries.size()); ++j) {
    PoleSite site;
    site.face = j;
    site.residue = rv.entries[j];
    site.weight = rv.entries[j] - 1;
    site.angle_over_pi = 2 * rv.entries[j];
    data.pole_sites.push_back(std::move(site));
  }
  const auto valencies = vertex_valencies(mg.graph);
  for (const auto& [vertex, valency] : valencies) {
    ZeroSite site;
    site.vertex = vertex;
    site.order = valency - 2;
    site.weight = Rational(valency - 2, 2);
    site.angle_over_pi = valency;  // (order + 2)
    data.zero_sites.push_back(std::move(site));
  }

  data.degree = 0;
  for (const auto& p : data.pole_sites) data.degree += p.weight;
  for (const auto& z : data.zero_sites) data.degree += z.weight;
  data.gauss_bonnet = Rational(2 - 2 * data.genus) + data.degree;

  gauss_bonnet_check(data, data.genus);
  return data;
}

Rational gauss_bonnet_check(const SphericalDivisorData& data, int genus) {
  const Rational chi = Rational(2 - 2 * genus) + data.degree;
  Rational residue_sum = 0;
  for (const auto& p : data.pole_sites) residue_sum += p.residue;
  if (chi != residue_sum) throw std::logic_error("Gauss-Bonnet value differs from the residue sum");
  if (chi <= 0) throw std::logic_error("Gauss-Bonnet value must be positive");
  return chi;
}

ReducibilityVerdict reducibility_classify(const MetricRibbonGraph& mg, const SpectralCoverResult& cover) {
  if (cover.half_edge_count != mg.graph.half_edge_count)
    throw std::invalid_argument("cover result belongs to a different graph");
  const auto data = divisor_and_angles(mg);

  if (cover.degenerate) return {Reducibility::Reducible, "R1: square of a one-form, co-axial family"};

  const bool genus0 = (data.genus == 0);
  auto is_integer = [](const Rational& r) { return denominator(r) == 1; };

  if (genus0) {
    // Poles with residue 1 are marked smooth points, not cone points.
    int cone_points = static_cast<int>(data.zero_sites.size());
    bool any_integral_residue = false;
    for (const auto& p : data.pole_sites) {
      if (p.residue != 1) ++cone_points;
      if (is_integer(p.residue)) any_integral_residue = true;
    }
    bool any_even_order = false;
    for (const auto& z : data.zero_sites)
      if (z.order % 2 == 0) any_even_order = true;

    if (cone_points > 2 && !any_integral_residue && !any_even_order)
      return {Reducibility::Irreducible, "R2: no cone angle in 2*pi*Z_{>1}"};

    const bool all_integral = [&] {
      for (const auto& p : data.pole_sites)
        if (!is_integer(p.residue)) return false;
      return true;
    }();
    if (data.pole_sites.size() == 3 && all_integral && data.zero_sites.size() == 2 &&
        data.zero_sites[0].order == 1 && data.zero_sites[1].order == 1)
      return {Reducibility::Reducible, "R3: integral residues, Z2 monodromy from two 3*pi points"};
  }
  return {Reducibility::Unknown, ""};
}

}  // namespace strebel
