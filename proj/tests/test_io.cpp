#include "strebel/io.hpp"

#include "strebel/construct.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace strebel;

TEST_CASE("rational parsing is exact") {
  CHECK(*parse_rational("0.7") == Rational(7, 10));
  CHECK(*parse_rational("12.25") == Rational(49, 4));
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("7/10") == Rational(7, 10));
  CHECK(*parse_rational("-1/2") == Rational(-1, 2));
  CHECK(*parse_rational(".5") == Rational(1, 2));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("abc").has_value());
  CHECK_FALSE(parse_rational("1.2.3").has_value());
  CHECK(fraction_string(Rational(7, 10)) == "7/10");
  CHECK(fraction_string(Rational(3)) == "3/1");
  CHECK(fraction_string(Rational(6, 4)) == "3/2");
}

TEST_CASE("combinatorial graph JSON round-trips without lengths") {
  const auto theta = testing::theta_graph(1, 1, 1).graph;
  const auto text = ribbon_graph_to_json(theta, -1);
  const auto parsed = ribbon_graph_from_json(text);
  CHECK(parsed.sigma == theta.sigma);
  CHECK(parsed.alpha == theta.alpha);
  CHECK(text.find("lengths") == std::string::npos);
}

TEST_CASE("graph JSON round-trips bit-exactly") {
  const auto built = build(1, {Rational(7, 10), Rational(3, 2), 2});
  const auto text = metric_graph_to_json(built.graph);
  const auto parsed = metric_graph_from_json(text);
  CHECK(parsed.graph.half_edge_count == built.graph.graph.half_edge_count);
  CHECK(parsed.graph.sigma == built.graph.graph.sigma);
  CHECK(parsed.graph.alpha == built.graph.graph.alpha);
  CHECK(parsed.lengths == built.graph.lengths);
  CHECK(metric_graph_to_json(parsed) == text);
}

TEST_CASE("graph JSON rejects malformed input") {
  CHECK_THROWS_AS(metric_graph_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(metric_graph_from_json("{\"half_edge_count\": 2}"), std::invalid_argument);
  // alpha with a fixed point
  CHECK_THROWS_AS(
      metric_graph_from_json(
          R"({"half_edge_count":2,"sigma":[1,0],"alpha":[0,1],"lengths":["1/1"]})"),
      std::invalid_argument);
  // bad length string
  CHECK_THROWS_AS(
      metric_graph_from_json(
          R"({"half_edge_count":2,"sigma":[1,0],"alpha":[1,0],"lengths":["x"]})"),
      std::invalid_argument);
}

TEST_CASE("reports serialize with exact fraction fields") {
  const auto mg = build_three_pole(1, 1, 2).graph;
  const auto cover = degeneracy_check(mg);
  const auto data = divisor_and_angles(mg);
  const auto verdict = reducibility_classify(mg, cover);

  const auto spherical = spherical_report_to_json(data, verdict, -1);
  CHECK(spherical.find("\"angle_over_pi\":\"4/1\"") != std::string::npos);
  CHECK(spherical.find("\"gauss_bonnet\":\"4/1\"") != std::string::npos);
  CHECK(spherical.find("\"tag\":\"Reducible\"") != std::string::npos);

  const auto spectral = spectral_report_to_json(cover, -1);
  CHECK(spectral.find("\"degenerate\":true") != std::string::npos);
  CHECK(spectral.find("\"components\":2") != std::string::npos);

  const auto theta_cover = degeneracy_check(build_three_pole(1, 1, 1).graph);
  const auto theta_spectral = spectral_report_to_json(theta_cover, -1);
  CHECK(theta_spectral.find("\"edge_signs\":null") != std::string::npos);
}

TEST_CASE("atomic write leaves no temp file behind") {
  const std::string path = "io_test_atomic.json";
  atomic_write_file(path, "{}\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "{}\n");
  std::ifstream tmp(path + ".tmp");
  CHECK_FALSE(tmp.good());
  std::remove(path.c_str());
}

TEST_CASE("surgery trace serializes steps with parameters") {
  const auto r = build_sphere_simple({1, 2, 3, 4});
  const auto text = surgery_trace_to_json(r.trace, -1);
  CHECK(text.find("\"step\":\"sort\"") != std::string::npos);
  CHECK(text.find("\"residues\"") != std::string::npos);
}
