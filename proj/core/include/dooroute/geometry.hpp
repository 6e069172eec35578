#pragma once

#include <optional>
#include <vector>

#include "dooroute/errors.hpp"

namespace dooroute {

// Tolerances. The boards this library targets are decimeter-scale, so
// absolute epsilons in meters leave plenty of headroom.
inline constexpr double kEps = 1e-9;         // coordinate / half-plane slack
inline constexpr double kLenEps = 1e-6;      // minimum shared-side length
inline constexpr double kAreaRelTol = 1e-6;  // relative area conservation

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double norm(Point2 a);
double distance(Point2 a, Point2 b);

// Vertices are CCW for outer boundaries and region polygons, CW for holes.
struct Polygon {
  std::vector<Point2> vertices;
};

struct Segment {
  Point2 a;
  Point2 b;
  double length() const { return distance(a, b); }
};

struct ConvexRegion {
  int id = 0;
  Polygon polygon;
  Point2 centroid;
};

struct TunnelSpec {
  int id = 0;
  Point2 entrance_a;
  Point2 entrance_b;
};

struct Layout {
  Polygon boundary;
  std::vector<Polygon> holes;
  std::vector<TunnelSpec> tunnels;
  std::optional<std::vector<Polygon>> predecomposed;
};

// A Layout that passed validate_layout. Construction is gated so downstream
// operations can assume the invariants.
class ValidatedLayout {
 public:
  const Layout& get() const { return layout_; }
  const Polygon& boundary() const { return layout_.boundary; }
  const std::vector<Polygon>& holes() const { return layout_.holes; }
  const std::vector<TunnelSpec>& tunnels() const { return layout_.tunnels; }

 private:
  friend ValidatedLayout validate_layout(const Layout& layout);
  explicit ValidatedLayout(Layout layout) : layout_(std::move(layout)) {}
  Layout layout_;
};

// Throws an Error naming the first violated invariant.
ValidatedLayout validate_layout(const Layout& layout);

double polygon_area(const Polygon& polygon);
bool is_convex(const Polygon& polygon);
bool is_simple(const Polygon& polygon);
Point2 centroid(const Polygon& polygon);

// Largest inscribed-circle radius lower bound: min distance from the
// centroid to any edge. Good enough for jitter bounds on convex regions.
double inradius_at_centroid(const Polygon& polygon);

double distance_point_segment(Point2 p, Point2 a, Point2 b);
bool point_in_polygon(Point2 p, const Polygon& polygon, double eps = kEps);
bool point_on_polygon_boundary(Point2 p, const Polygon& polygon,
                               double eps = kEps);

// Ear-clipping with hole bridging. Returns CCW triangles covering the free
// space (boundary minus holes).
std::vector<Polygon> triangulate(const Polygon& boundary,
                                 const std::vector<Polygon>& holes);

// Hertel-Mehlhorn style greedy diagonal removal over a triangulation.
std::vector<ConvexRegion> merge_convex(const std::vector<Polygon>& triangles);

// Adopts layout.predecomposed when present (after checking convexity and
// tiling), otherwise triangulate + merge_convex. Region ids are dense from 0.
std::vector<ConvexRegion> decompose(const ValidatedLayout& layout);

// Region id containing the point, -1 when outside the boundary or inside a
// hole. Boundary ties go to the lowest region id.
int locate(Point2 point, const std::vector<ConvexRegion>& regions,
           const ValidatedLayout& layout);

// Maximal collinear overlap between edges of a and b when longer than
// kLenEps; corner touches yield nullopt.
std::optional<Segment> shared_side(const ConvexRegion& a,
                                   const ConvexRegion& b);

// True when the region has at least one edge with collinear overlap longer
// than kLenEps against the outer boundary (hole boundaries do not count).
bool touches_outer_boundary(const ConvexRegion& region,
                            const ValidatedLayout& layout);

}  // namespace dooroute
