// Command-line front end: build graphs with prescribed boundary lengths,
// analyze graph files, probe the explicit three-pole differential, and run
// the full property suite.

#include "dot_export.hpp"

#include "strebel/acceptance.hpp"
#include "strebel/construct.hpp"
#include "strebel/io.hpp"
#include "strebel/numeric.hpp"
#include "strebel/spectral.hpp"
#include "strebel/spherical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <random>

namespace {

using nlohmann::json;
using namespace strebel;

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitInternalError = 2;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content << "\n";
  } else {
    atomic_write_file(out_path, content + "\n");
  }
}

std::vector<Rational> parse_residues(const std::vector<std::string>& texts) {
  std::vector<Rational> residues;
  for (const auto& t : texts) {
    const auto parsed = parse_rational(t);
    if (!parsed || *parsed <= 0) throw std::invalid_argument("residue '" + t + "' is not a positive rational");
    residues.push_back(*parsed);
  }
  return residues;
}

json spherical_block(const MetricRibbonGraph& mg) {
  const auto cover = degeneracy_check(mg);
  const auto data = divisor_and_angles(mg);
  const auto verdict = reducibility_classify(mg, cover);
  json block;
  block["spherical"] = json::parse(spherical_report_to_json(data, verdict));
  block["spectral"] = json::parse(spectral_report_to_json(cover));
  return block;
}

int run_build(int genus, const std::vector<std::string>& residue_texts, const std::string& out_path,
              const std::string& format) {
  const auto alpha = parse_residues(residue_texts);
  const auto result = build(genus, alpha);

  if (format == "dot") {
    emit(cli::dot_export(result.graph), out_path);
    return kExitOk;
  }
  json doc = json::parse(metric_graph_to_json(result.graph));
  doc["genus"] = genus;
  json labels = json::array();
  for (size_t j = 0; j < alpha.size(); ++j) labels.push_back(j);
  doc["face_labels"] = labels;  // identity: faces are relabeled to input order
  doc["trace"] = json::parse(surgery_trace_to_json(result.trace));
  doc.update(spherical_block(result.graph));
  emit(doc.dump(2), out_path);
  return kExitOk;
}

int run_analyze(const std::string& input_path, const std::string& out_path) {
  std::ifstream in(input_path);
  if (!in) throw std::invalid_argument("cannot read " + input_path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto mg = metric_graph_from_json(text);

  json doc;
  const auto admissibility = strebel_admissible(mg);
  doc["admissible"] = {{"ok", admissibility.admissible}, {"reasons", admissibility.reasons}};
  if (is_connected(mg.graph)) {
    const auto rv = residue_vector(mg);
    doc["genus"] = rv.genus;
    doc["residues"] = fraction_strings(rv.entries);
  } else {
    doc["genus"] = nullptr;
    doc["residues"] = nullptr;
  }
  if (admissibility.admissible) {
    json parts = json::array();
    for (int m : zero_partition(mg).parts) parts.push_back(m);
    doc["zero_partition"] = parts;
    doc.update(spherical_block(mg));
  } else {
    doc["zero_partition"] = nullptr;
    doc["spherical"] = nullptr;
    doc["spectral"] = nullptr;
  }
  emit(doc.dump(2), out_path);
  return kExitOk;
}

int run_threepole(const std::vector<std::string>& residue_texts, double radius, int steps, double fd_step,
                  std::uint64_t seed, const std::string& out_path) {
  const auto alpha = parse_residues(residue_texts);
  const auto three = build_three_pole(alpha[0], alpha[1], alpha[2]);

  json doc;
  doc["class"] = to_string(three.cls);
  doc["residues"] = fraction_strings(alpha);
  doc["crosscheck"] = classify_crosscheck(alpha[0], alpha[1], alpha[2]);
  doc.update(spherical_block(three.graph));
  doc["graph"] = json::parse(metric_graph_to_json(three.graph));

  const auto d = q_poly(to_double(alpha[0]), to_double(alpha[1]), to_double(alpha[2]));
  doc["coefficients"] = {{"A", d.A}, {"B", d.B}, {"C", d.C}};
  doc["zeros"] = {{d.zeros[0].real(), d.zeros[0].imag()}, {d.zeros[1].real(), d.zeros[1].imag()}};

  const std::vector<std::complex<double>> critical = {{0, 0}, {1, 0}, d.zeros[0], d.zeros[1]};
  doc["poles"] = json::array();
  for (int pole = 0; pole < 3; ++pole) {
    const std::complex<double> center = (pole == 1) ? std::complex<double>(1, 0) : std::complex<double>(0, 0);
    double nearest = 1e300;
    if (pole == 2) {
      nearest = std::min({std::abs(1.0 / d.zeros[0]), std::abs(1.0 / d.zeros[1]), 1.0});
    } else {
      for (const auto& c : critical)
        if (std::abs(c - center) > 0) nearest = std::min(nearest, std::abs(c - center));
    }
    const double r = radius > 0 ? radius : 0.45 * nearest;
    const auto probe = pole_monodromy_numeric(d, pole, r, steps);
    doc["poles"].push_back({{"pole", pole},
                            {"radius", r},
                            {"multiplier", {probe.multiplier.real(), probe.multiplier.imag()}},
                            {"unit_deviation", probe.unit_deviation},
                            {"phase", probe.phase},
                            {"phase_error", probe.phase_error}});
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-1.5, 2.5), im(-2.0, 2.0);
  std::vector<std::complex<double>> samples;
  while (samples.size() < 5) {
    const std::complex<double> z(re(rng), im(rng));
    double margin = 1e300;
    for (const auto& c : critical) margin = std::min(margin, std::abs(z - c));
    if (margin > 0.6) samples.push_back(z);
  }
  doc["curvature"] = json::array();
  for (const auto& s : curvature_probe(d, samples, fd_step))
    doc["curvature"].push_back(
        {{"point", {s.point.real(), s.point.imag()}}, {"K", s.K}, {"abs_error", s.error}});

  emit(doc.dump(2), out_path);
  return kExitOk;
}

int run_check(int suite_size, std::uint64_t seed) {
  acceptance::Options options;
  options.suite_size = suite_size;
  options.seed = seed;
  const auto results = acceptance::run_all(options);
  for (const auto& r : results) {
    std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
  }
  return acceptance::all_passed(results) ? kExitOk : kExitUserError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric ribbon graphs with prescribed boundary lengths and their cone spherical data"};
  app.require_subcommand(1);

  int genus = 0;
  std::vector<std::string> residue_texts;
  std::string out_path, format = "json", input_path;
  double radius = 0, fd_step = 1e-3;
  int steps = 4096, suite_size = 500;
  std::uint64_t seed = 20260810;

  auto* build_cmd = app.add_subcommand("build", "construct a trivalent metric ribbon graph");
  build_cmd->add_option("genus", genus, "target genus")->required();
  build_cmd->add_option("residues", residue_texts, "prescribed face perimeters (exact rationals)")
      ->required()
      ->expected(-1);
  build_cmd->add_option("--out", out_path, "output file (default: stdout)");
  build_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a graph JSON file");
  analyze_cmd->add_option("graph", input_path, "graph JSON path")->required();
  analyze_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* threepole_cmd = app.add_subcommand("threepole", "classify and numerically probe a three-pole prescription");
  threepole_cmd->add_option("residues", residue_texts, "a1 a2 a3")->required()->expected(3);
  threepole_cmd->add_option("--radius", radius, "contour radius (default: auto)");
  threepole_cmd->add_option("--steps", steps, "trapezoid steps (default 4096)");
  threepole_cmd->add_option("--fd-step", fd_step, "finite-difference step (default 1e-3)");
  threepole_cmd->add_option("--seed", seed, "sample-point seed");
  threepole_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* check_cmd = app.add_subcommand("check", "run the full property suite");
  check_cmd->add_option("--suite-size", suite_size, "random cases in the existence sweep (default 500)");
  check_cmd->add_option("--seed", seed, "suite seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build_cmd->parsed()) return run_build(genus, residue_texts, out_path, format);
    if (analyze_cmd->parsed()) return run_analyze(input_path, out_path);
    if (threepole_cmd->parsed()) return run_threepole(residue_texts, radius, steps, fd_step, seed, out_path);
    if (check_cmd->parsed()) return run_check(suite_size, seed);
  } catch (const std::invalid_argument& err) {
    std::cout << nlohmann::json{{"error", err.what()}, {"kind", "precondition"}}.dump() << "\n";
    return kExitUserError;
  } catch (const std::logic_error& err) {
    std::cout << nlohmann::json{{"error", err.what()}, {"kind", "internal"}}.dump() << "\n";
    return kExitInternalError;
  } catch (const std::exception& err) {
    std::cout << nlohmann::json{{"error", err.what()}, {"kind", "precondition"}}.dump() << "\n";
    return kExitUserError;
  }
  return kExitUserError;
}
