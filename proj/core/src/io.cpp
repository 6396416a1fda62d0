#include "strebel/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace strebel {

using nlohmann::json;

std::string ribbon_graph_to_json(const RibbonGraph& g, int indent) {
  require_valid(g);
  json doc;
  doc["half_edge_count"] = g.half_edge_count;
  doc["sigma"] = g.sigma;
  doc["alpha"] = g.alpha;
  return doc.dump(indent);
}

RibbonGraph ribbon_graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("graph JSON malformed: ") + err.what());
  }
  RibbonGraph g;
  try {
    g.half_edge_count = doc.at("half_edge_count").get<int>();
    g.sigma = doc.at("sigma").get<std::vector<int>>();
    g.alpha = doc.at("alpha").get<std::vector<int>>();
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("graph JSON missing or mistyped field: ") + err.what());
  }
  require_valid(g);
  return g;
}

std::string metric_graph_to_json(const MetricRibbonGraph& mg, int indent) {
  require_metric(mg);
  json doc;
  doc["half_edge_count"] = mg.graph.half_edge_count;
  doc["sigma"] = mg.graph.sigma;
  doc["alpha"] = mg.graph.alpha;
  doc["lengths"] = fraction_strings(mg.lengths);
  return doc.dump(indent);
}

MetricRibbonGraph metric_graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("graph JSON malformed: ") + err.what());
  }
  MetricRibbonGraph mg;
  try {
    mg.graph.half_edge_count = doc.at("half_edge_count").get<int>();
    mg.graph.sigma = doc.at("sigma").get<std::vector<int>>();
    mg.graph.alpha = doc.at("alpha").get<std::vector<int>>();
    for (const auto& item : doc.at("lengths")) {
      const auto parsed = parse_rational(item.get<std::string>());
      if (!parsed) throw std::invalid_argument("length entry is not a rational: " + item.get<std::string>());
      mg.lengths.push_back(*parsed);
    }
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("graph JSON missing or mistyped field: ") + err.what());
  }
  require_metric(mg);
  return mg;
}

std::string surgery_trace_to_json(const SurgeryTrace& trace, int indent) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json s;
    s["step"] = step.name;
    json params = json::object();
    for (const auto& [key, value] : step.params) params[key] = value;
    s["params"] = params;
    s["residues"] = fraction_strings(step.residues);
    steps.push_back(std::move(s));
  }
  return steps.dump(indent);
}

std::string spherical_report_to_json(const SphericalDivisorData& data, const ReducibilityVerdict& verdict,
                                     int indent) {
  json doc;
  doc["poles"] = json::array();
  for (const auto& p : data.pole_sites) {
    doc["poles"].push_back({{"face", p.face},
                            {"residue", fraction_string(p.residue)},
                            {"angle_over_pi", fraction_string(p.angle_over_pi)}});
  }
  doc["zeros"] = json::array();
  for (const auto& z : data.zero_sites) {
    doc["zeros"].push_back(
        {{"vertex", z.vertex}, {"order", z.order}, {"angle_over_pi", fraction_string(z.angle_over_pi)}});
  }
  doc["gauss_bonnet"] = fraction_string(data.gauss_bonnet);
  doc["reducibility"] = {{"tag", to_string(verdict.tag)}, {"rule", verdict.rule}};
  return doc.dump(indent);
}

std::string spectral_report_to_json(const SpectralCoverResult& cover, int indent) {
  json doc;
  doc["branch_vertices"] = cover.branch_vertices;
  doc["degenerate"] = cover.degenerate;
  doc["components"] = cover.component_count;
  if (cover.branch_vertices.empty()) {
    json signs = json::object();
    for (const auto& [edge, sign] : cover.edge_signs) signs[std::to_string(edge)] = sign;
    doc["edge_signs"] = signs;
  } else {
    doc["edge_signs"] = nullptr;
  }
  return doc.dump(indent);
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("atomic rename to " + path + " failed");
  }
}

}  // namespace strebel
