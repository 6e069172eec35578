#pragma once

#include <utility>
#include <vector>

#include "dooroute/geometry.hpp"

namespace dooroute {

// Vertex id space: -1 is the outside vertex, 0..k-1 the convex regions,
// k..n-1 the tunnel entrance vertices (two per tunnel, entrance_a then
// entrance_b, in tunnel-id order).
using VertexId = int;
inline constexpr VertexId kOutsideVertex = -1;

struct VertexKind {
  enum class Type { Outside, Region, TunnelEntrance };
  Type type = Type::Outside;
  int region_id = -1;            // Region only
  int tunnel_id = -1;            // TunnelEntrance only
  int end = 0;                   // 0 = entrance_a, 1 = entrance_b
  Point2 anchor;                 // TunnelEntrance only
  VertexId host = kOutsideVertex;  // region/outside vertex the anchor lies on
};

class SpatialGraph {
 public:
  SpatialGraph(std::vector<VertexKind> kinds,
               std::vector<std::pair<VertexId, VertexId>> edges);

  // Total vertex count including the outside vertex (n + 1 ids overall).
  int vertex_count() const { return static_cast<int>(kinds_.size()); }
  bool contains(VertexId v) const {
    return v >= -1 && v + 1 < static_cast<int>(kinds_.size());
  }
  const VertexKind& kind(VertexId v) const;

  // Ascending neighbor list (the outside vertex -1 sorts first).
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  // Minimum-hop path, u and v inclusive. Deterministic: region vertices are
  // expanded in ascending id order, the outside vertex last, so ties prefer
  // routes over the board surface.
  std::vector<VertexId> shortest_path(VertexId u, VertexId v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  bool is_connected() const;

 private:
  std::vector<VertexKind> kinds_;                       // index = id + 1
  std::vector<std::vector<VertexId>> adjacency_;        // index = id + 1
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Applies the four adjacency rules: shared-side region pairs; boundary-
// touching regions to the outside vertex; each tunnel's entrance pair to each
// other; each entrance to the region (or outside) its anchor lies on.
SpatialGraph build_graph(const std::vector<ConvexRegion>& regions,
                         const ValidatedLayout& layout);

}  // namespace dooroute
