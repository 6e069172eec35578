#pragma once

#include <string>

#include "dooroute/simulator.hpp"

namespace dooroute {

// Layout JSON: {"boundary": [[x,y],...], "holes": [[[x,y],...],...],
// "tunnels": [{"id":0,"a":[x,y],"b":[x,y]},...], "regions": optional}.
Layout layout_from_json(const std::string& text);
std::string layout_to_json(const Layout& layout,
                           const std::vector<ConvexRegion>& regions);

// Polyline JSON: {"points": [[x,y],...], "tunnel_tags": [[seg,tunnel],...]}.
DooPolyline polyline_from_json(const std::string& text);

// Configuration JSON: {"seq": [-1,0,1]}.
Configuration configuration_from_json(const std::string& text);
std::string configuration_to_json(const Configuration& c);

// Graph JSON with edges (u < v) sorted lexicographically.
std::string graph_to_json(const SpatialGraph& g);

std::string stats_to_json(const BenchmarkStats& stats);
std::string episode_step_to_json(const EpisodeStep& step);

// True when the JSON object has a "points" key (polyline) rather than "seq".
bool json_is_polyline(const std::string& text);

}  // namespace dooroute
