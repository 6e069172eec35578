#pragma once

#include <optional>
#include <string>

#include "dooroute/simulator.hpp"

namespace dooroute {

// SVG of the board: boundary, holes, regions with centroid dots, graph edges
// between region centroids, tunnel entrances, and (optionally) the DOO.
std::string render_svg(const ValidatedLayout& layout,
                       const std::vector<ConvexRegion>& regions,
                       const SpatialGraph& graph,
                       const std::optional<DooPolyline>& doo);

}  // namespace dooroute
