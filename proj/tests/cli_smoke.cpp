// Drives the installed CLI binary end to end: round-trip build -> analyze,
// error exit codes, DOT output, and determinism for a fixed seed.

#include "strebel/io.hpp"
#include "strebel/metric.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run(const std::string& command) {
  const std::string wrapped = command + " 2>/dev/null";
  FILE* pipe = popen(wrapped.c_str(), "r");
  RunResult result;
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  while (size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) result.output.append(buffer.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_smoke <path-to-strebel-binary>\n";
    return 2;
  }
  const std::string binary = argv[1];

  // build writes a graph whose analysis returns the request exactly
  const auto build = run(binary + " build 1 0.7 1.5 2 --out cli_smoke_graph.json");
  expect(build.status == 0, "build exits 0");
  {
    std::ifstream in("cli_smoke_graph.json");
    expect(in.good(), "build wrote the output file");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto mg = strebel::metric_graph_from_json(text);
    const auto rv = strebel::residue_vector(mg);
    expect(rv.genus == 1, "round-trip genus");
    expect(rv.entries == std::vector<strebel::Rational>{strebel::Rational(7, 10), strebel::Rational(3, 2), 2},
           "round-trip residues are exact");
    expect(text.find("\"trace\"") != std::string::npos, "build output carries the surgery trace");
    expect(text.find("\"spherical\"") != std::string::npos, "build output carries the spherical report");
  }

  const auto analyze = run(binary + " analyze cli_smoke_graph.json");
  expect(analyze.status == 0, "analyze exits 0");
  expect(analyze.output.find("\"7/10\"") != std::string::npos, "analyze reports the exact residues");
  expect(analyze.output.find("\"genus\": 1") != std::string::npos, "analyze reports the genus");

  // DOT export
  const auto dot = run(binary + " build 0 1 1 1 --format dot");
  expect(dot.status == 0, "dot build exits 0");
  expect(dot.output.find("graph ribbon {") != std::string::npos, "dot header present");
  expect(dot.output.find("1/2") != std::string::npos, "dot edges carry the exact lengths");
  expect(dot.output.find("rotation=") != std::string::npos, "dot encodes the rotation system");

  // precondition failures exit 1 with machine-readable JSON
  const auto excluded = run(binary + " build 0 1 1 2");
  expect(excluded.status == 1, "excluded case exits 1");
  expect(excluded.output.find("\"error\"") != std::string::npos, "error JSON emitted");
  expect(excluded.output.find("excluded case") != std::string::npos, "error names the excluded case");

  const auto garbage = run(binary + " analyze does_not_exist.json");
  expect(garbage.status == 1, "missing input exits 1");

  // a valid but inadmissible graph (single loop) analyzes gracefully
  {
    strebel::MetricRibbonGraph loop;
    loop.graph.half_edge_count = 2;
    loop.graph.sigma = {1, 0};
    loop.graph.alpha = {1, 0};
    loop.lengths = {strebel::Rational(1)};
    std::ofstream out("cli_smoke_loop.json");
    out << strebel::metric_graph_to_json(loop);
  }
  const auto loop_analysis = run(binary + " analyze cli_smoke_loop.json");
  expect(loop_analysis.status == 0, "inadmissible graph analyzes without error");
  expect(loop_analysis.output.find("\"ok\": false") != std::string::npos, "admissibility reported false");
  expect(loop_analysis.output.find("valency 2 < 3") != std::string::npos, "valency reason reported");
  std::remove("cli_smoke_loop.json");

  // threepole: tangent prescription is degenerate and reducible
  const auto tangent = run(binary + " threepole 1 1 2 --steps 512");
  expect(tangent.status == 0, "threepole exits 0");
  expect(tangent.output.find("\"class\": \"Tangent\"") != std::string::npos, "tangent classified");
  expect(tangent.output.find("\"degenerate\": true") != std::string::npos, "tangent degenerate");
  expect(tangent.output.find("\"tag\": \"Reducible\"") != std::string::npos, "tangent reducible");

  // determinism for a fixed seed
  const auto probe1 = run(binary + " threepole 0.5 0.7 0.9 --steps 256 --seed 7");
  const auto probe2 = run(binary + " threepole 0.5 0.7 0.9 --steps 256 --seed 7");
  expect(probe1.status == 0 && probe2.status == 0, "threepole probes exit 0");
  expect(probe1.output == probe2.output, "output is deterministic for a fixed seed");

  std::remove("cli_smoke_graph.json");
  if (failures == 0) std::cout << "cli smoke: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
