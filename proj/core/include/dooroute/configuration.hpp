#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dooroute/spatial_graph.hpp"

namespace dooroute {

inline constexpr double kSampleStep = 1e-3;  // default encode sampling, m
inline constexpr double kSnapTol = 1e-3;     // tunnel-tag anchor snap, m

// Geometric DOO state: a polyline with optional (segment index, tunnel id)
// tags marking segments that go through a tunnel rather than over the board.
struct DooPolyline {
  std::vector<Point2> points;
  std::vector<std::pair<int, int>> tunnel_tags;

  double arc_length() const;
  Point2 point_at(double s) const;  // clamped arc-length parameterization
};

// Discrete DOO state: the ordered vertex-id sequence.
struct Configuration {
  std::vector<VertexId> seq;

  bool operator==(const Configuration&) const = default;
};

// Configuration plus, per element, the arc-length extent of the polyline
// samples that produced it. Used by the simulator to turn span-replacement
// actions into grasps.
struct TrackedConfiguration {
  Configuration config;
  std::vector<std::pair<double, double>> spans;
};

TrackedConfiguration encode_tracked(const DooPolyline& doo,
                                    const SpatialGraph& g,
                                    const std::vector<ConvexRegion>& regions,
                                    const ValidatedLayout& layout,
                                    double sample_step = kSampleStep);

Configuration encode(const DooPolyline& doo, const SpatialGraph& g,
                     const std::vector<ConvexRegion>& regions,
                     const ValidatedLayout& layout,
                     double sample_step = kSampleStep);

// Contiguous (a, b, a) -> (a) reduction to fixpoint, left to right with a
// restart after every reduction. Removes slack touches; idempotent and
// endpoint-preserving.
Configuration simplify(const Configuration& c);
TrackedConfiguration simplify_tracked(const TrackedConfiguration& c);

// ok (nullopt) or the index of the first violation: empty sequence, unknown
// vertex, consecutive repeat, or a consecutive pair without an edge.
std::optional<size_t> validate(const Configuration& c, const SpatialGraph& g);

Configuration reverse(const Configuration& c);

// Equality up to reversal (a bidirectional DOO has no head or tail).
bool bidirectional_equal(const Configuration& a, const Configuration& b);

}  // namespace dooroute
