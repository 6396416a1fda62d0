#pragma once

#include "strebel/construct.hpp"
#include "strebel/metric.hpp"
#include "strebel/spectral.hpp"
#include "strebel/spherical.hpp"

#include <string>

namespace strebel {

// Graph JSON: {"half_edge_count": int, "sigma": [int...], "alpha": [int...]}
// with the image of i at position i. The metric form adds "lengths":
// ["p/q"...] indexed by edge id (edges ordered by their smaller half-edge).
std::string ribbon_graph_to_json(const RibbonGraph& g, int indent = 2);
RibbonGraph ribbon_graph_from_json(const std::string& text);

std::string metric_graph_to_json(const MetricRibbonGraph& mg, int indent = 2);
MetricRibbonGraph metric_graph_from_json(const std::string& text);

std::string surgery_trace_to_json(const SurgeryTrace& trace, int indent = 2);

// {"poles": [{"face", "residue", "angle_over_pi"}...], "zeros": [...],
//  "gauss_bonnet": "p/q", "reducibility": {"tag", "rule"}}
std::string spherical_report_to_json(const SphericalDivisorData& data, const ReducibilityVerdict& verdict,
                                     int indent = 2);

// {"branch_vertices": [...], "degenerate": bool, "components": 1|2,
//  "edge_signs": {...} | null}
std::string spectral_report_to_json(const SpectralCoverResult& cover, int indent = 2);

// write-temp-then-rename so readers never observe a partial file
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace strebel
