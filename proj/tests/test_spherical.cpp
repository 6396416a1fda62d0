#include "strebel/spherical.hpp"

#include "strebel/construct.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace strebel;

TEST_CASE("theta (1,1,1): pole angles 2pi, zero angles 3pi") {
  const auto data = divisor_and_angles(testing::theta_graph(Rational(1, 2), Rational(1, 2), Rational(1, 2)));
  REQUIRE(data.pole_sites.size() == 3);
  for (const auto& p : data.pole_sites) {
    CHECK(p.residue == 1);
    CHECK(p.angle_over_pi == 2);
    CHECK(p.weight == 0);
  }
  REQUIRE(data.zero_sites.size() == 2);
  for (const auto& z : data.zero_sites) {
    CHECK(z.order == 1);
    CHECK(z.angle_over_pi == 3);
    CHECK(z.weight == Rational(1, 2));
  }
  CHECK(data.degree == 1);
  CHECK(data.gauss_bonnet == 3);
  CHECK(gauss_bonnet_check(data, 0) == 3);
}

TEST_CASE("tangent (1,1,2): pole angles 2pi,2pi,4pi and one 4pi zero") {
  const auto built = build_three_pole(1, 1, 2);
  const auto data = divisor_and_angles(built.graph);
  std::vector<Rational> pole_angles;
  for (const auto& p : data.pole_sites) pole_angles.push_back(p.angle_over_pi);
  CHECK(pole_angles == std::vector<Rational>{2, 2, 4});
  REQUIRE(data.zero_sites.size() == 1);
  CHECK(data.zero_sites[0].order == 2);
  CHECK(data.zero_sites[0].angle_over_pi == 4);
  CHECK(data.gauss_bonnet == 4);
}

TEST_CASE("(g,n)=(1,4) with unit residues: four marked points and eight 3pi angles") {
  const auto built = build(1, {1, 1, 1, 1});
  const auto data = divisor_and_angles(built.graph);
  REQUIRE(data.pole_sites.size() == 4);
  for (const auto& p : data.pole_sites) CHECK(p.angle_over_pi == 2);  // marked smooth points
  REQUIRE(data.zero_sites.size() == 8);
  for (const auto& z : data.zero_sites) CHECK(z.angle_over_pi == 3);
  CHECK(data.gauss_bonnet == 4);  // 0 + (0 + 8/2)
  CHECK(gauss_bonnet_check(data, 1) == 4);
}

TEST_CASE("Gauss-Bonnet equals the residue sum across random builds") {
  for (const auto& alpha : std::vector<std::vector<Rational>>{
           {Rational(1, 2), Rational(2, 3), Rational(3, 4)}, {1, 2, 3, 4}, {Rational(5, 2), 7}}) {
    const int g = alpha.size() >= 3 ? 0 : 1;
    const auto built = build(g, alpha);
    const auto data = divisor_and_angles(built.graph);
    Rational sum = 0;
    for (const auto& a : alpha) sum += a;
    CHECK(gauss_bonnet_check(data, g) == sum);
  }
}

TEST_CASE("reducibility rules") {
  auto classify = [](const MetricRibbonGraph& mg) { return reducibility_classify(mg, degeneracy_check(mg)); };

  SUBCASE("R1 fires on the degenerate tangent graph") {
    const auto verdict = classify(build_three_pole(1, 1, 2).graph);
    CHECK(verdict.tag == Reducibility::Reducible);
    CHECK(verdict.rule.substr(0, 2) == "R1");
  }
  SUBCASE("R2 fires on fractional residues with simple zeroes") {
    const auto verdict = classify(build_three_pole(Rational(1, 2), Rational(2, 3), Rational(3, 4)).graph);
    CHECK(verdict.tag == Reducibility::Irreducible);
    CHECK(verdict.rule.substr(0, 2) == "R2");
  }
  SUBCASE("R3 fires on three integral residues with two simple zeroes") {
    const auto verdict = classify(build_three_pole(1, 1, 1).graph);
    CHECK(verdict.tag == Reducibility::Reducible);
    CHECK(verdict.rule.substr(0, 2) == "R3");
  }
  SUBCASE("honest Unknown elsewhere") {
    const auto verdict = classify(build(1, {1, 1, 1, 1}).graph);  // positive genus
    CHECK(verdict.tag == Reducibility::Unknown);
    CHECK(verdict.rule.empty());
  }
  SUBCASE("mismatched cover is rejected") {
    const auto theta = build_three_pole(1, 1, 1).graph;
    auto cover = degeneracy_check(theta);
    cover.half_edge_count += 2;
    CHECK_THROWS_AS(reducibility_classify(theta, cover), std::invalid_argument);
  }
}

TEST_CASE("inadmissible input is rejected with the reasons") {
  CHECK_THROWS_WITH_AS(divisor_and_angles(testing::loop_graph(1)), doctest::Contains("valency"),
                       std::invalid_argument);
}
