#pragma once

#include "dooroute/simulator.hpp"

namespace dooroute::testing {

// 10x10 rectangle split into left/right halves at x = 5.
inline Layout fix_a() {
  Layout layout;
  layout.boundary = Polygon{{{0, 0}, {10, 0}, {10, 10}, {0, 10}}};
  layout.predecomposed = std::vector<Polygon>{
      Polygon{{{0, 0}, {5, 0}, {5, 10}, {0, 10}}},
      Polygon{{{5, 0}, {10, 0}, {10, 10}, {5, 10}}},
  };
  return layout;
}

// 2x2 square of four unit cells with one tunnel from cell 0 to cell 3.
// Region ids in input order: 0 bottom-left, 1 bottom-right, 2 top-left,
// 3 top-right. Entrance vertices: 4 (anchor in R0), 5 (anchor in R3).
inline Layout fix_b() {
  Layout layout;
  layout.boundary = Polygon{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}};
  layout.predecomposed = std::vector<Polygon>{
      Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}},
      Polygon{{{1, 0}, {2, 0}, {2, 1}, {1, 1}}},
      Polygon{{{0, 1}, {1, 1}, {1, 2}, {0, 2}}},
      Polygon{{{1, 1}, {2, 1}, {2, 2}, {1, 2}}},
  };
  layout.tunnels.push_back(TunnelSpec{0, {0.5, 0.5}, {1.5, 1.5}});
  return layout;
}

struct Board {
  ValidatedLayout layout;
  std::vector<ConvexRegion> regions;
  SpatialGraph graph;
};

inline Board make_board(const Layout& layout) {
  ValidatedLayout validated = validate_layout(layout);
  std::vector<ConvexRegion> regions = decompose(validated);
  SpatialGraph graph = build_graph(regions, validated);
  return {std::move(validated), std::move(regions), std::move(graph)};
}

}  // namespace dooroute::testing
