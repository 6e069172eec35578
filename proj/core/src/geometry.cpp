#include "dooroute/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace dooroute {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSimplePolygon: return "NonSimplePolygon";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::HoleOutsideBoundary: return "HoleOutsideBoundary";
    case ErrorCode::OverlappingHoles: return "OverlappingHoles";
    case ErrorCode::BadPredecomposition: return "BadPredecomposition";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::TriangulationFailure: return "TriangulationFailure";
    case ErrorCode::EntranceInHole: return "EntranceInHole";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::EmptyPolyline: return "EmptyPolyline";
    case ErrorCode::BadTunnelTag: return "BadTunnelTag";
    case ErrorCode::SpanOutOfRange: return "SpanOutOfRange";
    case ErrorCode::NoProgress: return "NoProgress";
    case ErrorCode::DegenerateSplice: return "DegenerateSplice";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

double norm(Point2 a) { return std::hypot(a.x, a.y); }
double distance(Point2 a, Point2 b) { return norm(a - b); }

double polygon_area(const Polygon& polygon) {
  const auto& v = polygon.vertices;
  if (v.size() < 3) {
    throw Error(ErrorCode::DegeneratePolygon, "polygon has < 3 vertices");
  }
  double twice = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    twice += cross(p, q);
  }
  return 0.5 * twice;
}

bool is_convex(const Polygon& polygon) {
  const auto& v = polygon.vertices;
  if (v.size() < 3) {
    throw Error(ErrorCode::DegeneratePolygon, "polygon has < 3 vertices");
  }
  const size_t n = v.size();
  int sign = 0;
  for (size_t i = 0; i < n; ++i) {
    Point2 e1 = v[(i + 1) % n] - v[i];
    Point2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    double c = cross(e1, e2);
    // Collinear vertices are tolerated.
    if (std::abs(c) <= kEps) continue;
    int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

double distance_point_segment(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 <= kEps * kEps) return distance(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

bool point_on_polygon_boundary(Point2 p, const Polygon& polygon, double eps) {
  const auto& v = polygon.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    if (distance_point_segment(p, v[i], v[(i + 1) % v.size()]) <= eps) {
      return true;
    }
  }
  return false;
}

bool point_in_polygon(Point2 p, const Polygon& polygon, double eps) {
  if (point_on_polygon_boundary(p, polygon, eps)) return true;
  // Crossing-number test; boundary cases were handled above.
  const auto& v = polygon.vertices;
  bool inside = false;
  for (size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      double xi = v[j].x + (v[i].x - v[j].x) * (p.y - v[j].y) / (v[i].y - v[j].y);
      if (p.x < xi) inside = !inside;
    }
  }
  return inside;
}

namespace {

bool segments_properly_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  auto orient = [](Point2 p, Point2 q, Point2 r) {
    double v = cross(q - p, r - p);
    if (v > kEps) return 1;
    if (v < -kEps) return -1;
    return 0;
  };
  int o1 = orient(a, b, c);
  int o2 = orient(a, b, d);
  int o3 = orient(c, d, a);
  int o4 = orient(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

bool polygons_interiors_overlap(const Polygon& a, const Polygon& b) {
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    Point2 p = a.vertices[i];
    Point2 q = a.vertices[(i + 1) % a.vertices.size()];
    for (size_t j = 0; j < b.vertices.size(); ++j) {
      Point2 r = b.vertices[j];
      Point2 s = b.vertices[(j + 1) % b.vertices.size()];
      if (segments_properly_intersect(p, q, r, s)) return true;
    }
  }
  // No crossing edges: overlap iff one contains the other.
  Point2 ca = centroid(a);
  Point2 cb = centroid(b);
  if (point_in_polygon(ca, b, -kEps) && !point_on_polygon_boundary(ca, b)) {
    return true;
  }
  if (point_in_polygon(cb, a, -kEps) && !point_on_polygon_boundary(cb, a)) {
    return true;
  }
  return false;
}

void check_polygon_basic(const Polygon& polygon, bool expect_ccw,
                         const std::string& what, int index) {
  const auto& v = polygon.vertices;
  if (v.size() < 3) {
    throw Error(ErrorCode::DegeneratePolygon,
                what + " " + std::to_string(index) + " has < 3 vertices");
  }
  for (const Point2& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::NonSimplePolygon,
                  what + " " + std::to_string(index) +
                      " has non-finite coordinates");
    }
  }
  for (size_t i = 0; i < v.size(); ++i) {
    if (distance(v[i], v[(i + 1) % v.size()]) <= kEps) {
      throw Error(ErrorCode::NonSimplePolygon,
                  what + " " + std::to_string(index) +
                      " has coincident consecutive vertices");
    }
  }
  if (!is_simple(polygon)) {
    throw Error(ErrorCode::NonSimplePolygon,
                what + " " + std::to_string(index) + " self-intersects");
  }
  double area = polygon_area(polygon);
  if (std::abs(area) <= kEps * kEps) {
    throw Error(ErrorCode::DegeneratePolygon,
                what + " " + std::to_string(index) + " has zero area");
  }
  if (expect_ccw != (area > 0)) {
    throw Error(ErrorCode::WrongOrientation,
                what + " " + std::to_string(index) +
                    (expect_ccw ? " must be counter-clockwise"
                                : " must be clockwise"));
  }
}

double free_space_area(const Layout& layout) {
  double area = polygon_area(layout.boundary);
  for (const Polygon& hole : layout.holes) {
    area -= std::abs(polygon_area(hole));
  }
  return area;
}

void check_predecomposition(const Layout& layout,
                            const std::vector<Polygon>& pieces) {
  double total = 0.0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    check_polygon_basic(pieces[i], /*expect_ccw=*/true, "region",
                        static_cast<int>(i));
    if (!is_convex(pieces[i])) {
      throw Error(ErrorCode::BadPredecomposition,
                  "region " + std::to_string(i) + " is not convex");
    }
    total += polygon_area(pieces[i]);
  }
  double expected = free_space_area(layout);
  if (std::abs(total - expected) > kAreaRelTol * std::max(1.0, expected)) {
    throw Error(ErrorCode::BadPredecomposition,
                "regions do not tile the free space (area " +
                    std::to_string(total) + " vs " + std::to_string(expected) +
                    ")");
  }
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      if (polygons_interiors_overlap(pieces[i], pieces[j])) {
        throw Error(ErrorCode::BadPredecomposition,
                    "regions " + std::to_string(i) + " and " +
                        std::to_string(j) + " overlap");
      }
    }
  }
}

}  // namespace

bool is_simple(const Polygon& polygon) {
  const auto& v = polygon.vertices;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    Point2 a = v[i];
    Point2 b = v[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      Point2 c = v[j];
      Point2 d = v[(j + 1) % n];
      if (segments_properly_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

Point2 centroid(const Polygon& polygon) {
  const auto& v = polygon.vertices;
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    double w = cross(p, q);
    twice_area += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  if (std::abs(twice_area) <= kEps * kEps) {
    throw Error(ErrorCode::DegeneratePolygon, "centroid of zero-area polygon");
  }
  return {cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

double inradius_at_centroid(const Polygon& polygon) {
  Point2 c = centroid(polygon);
  double r = std::numeric_limits<double>::max();
  const auto& v = polygon.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    r = std::min(r, distance_point_segment(c, v[i], v[(i + 1) % v.size()]));
  }
  return r;
}

ValidatedLayout validate_layout(const Layout& layout) {
  check_polygon_basic(layout.boundary, /*expect_ccw=*/true, "boundary", 0);
  for (size_t h = 0; h < layout.holes.size(); ++h) {
    check_polygon_basic(layout.holes[h], /*expect_ccw=*/false, "hole",
                        static_cast<int>(h));
    bool inside = true;
    for (const Point2& p : layout.holes[h].vertices) {
      if (!point_in_polygon(p, layout.boundary) ||
          point_on_polygon_boundary(p, layout.boundary)) {
        inside = false;
      }
    }
    for (size_t i = 0; inside && i < layout.holes[h].vertices.size(); ++i) {
      Point2 a = layout.holes[h].vertices[i];
      Point2 b = layout.holes[h]
                     .vertices[(i + 1) % layout.holes[h].vertices.size()];
      const auto& bv = layout.boundary.vertices;
      for (size_t j = 0; j < bv.size(); ++j) {
        if (segments_properly_intersect(a, b, bv[j],
                                        bv[(j + 1) % bv.size()])) {
          inside = false;
        }
      }
    }
    if (!inside) {
      throw Error(ErrorCode::HoleOutsideBoundary,
                  "hole " + std::to_string(h) + " is not inside the boundary");
    }
  }
  for (size_t i = 0; i < layout.holes.size(); ++i) {
    for (size_t j = i + 1; j < layout.holes.size(); ++j) {
      if (polygons_interiors_overlap(layout.holes[i], layout.holes[j])) {
        throw Error(ErrorCode::OverlappingHoles,
                    "holes " + std::to_string(i) + " and " +
                        std::to_string(j) + " overlap");
      }
    }
  }
  for (const TunnelSpec& t : layout.tunnels) {
    if (distance(t.entrance_a, t.entrance_b) <= kEps) {
      throw Error(ErrorCode::BadInput,
                  "tunnel " + std::to_string(t.id) +
                      " has coincident entrances");
    }
  }
  for (size_t i = 0; i < layout.tunnels.size(); ++i) {
    for (size_t j = i + 1; j < layout.tunnels.size(); ++j) {
      const TunnelSpec& a = layout.tunnels[i];
      const TunnelSpec& b = layout.tunnels[j];
      for (Point2 pa : {a.entrance_a, a.entrance_b}) {
        for (Point2 pb : {b.entrance_a, b.entrance_b}) {
          if (distance(pa, pb) <= kEps) {
            throw Error(ErrorCode::BadInput,
                        "tunnels " + std::to_string(a.id) + " and " +
                            std::to_string(b.id) + " share an entrance point");
          }
        }
      }
    }
  }
  if (layout.predecomposed) {
    check_predecomposition(layout, *layout.predecomposed);
  }
  return ValidatedLayout(layout);
}

// ---------------------------------------------------------------------------
// Triangulation: hole bridging + ear clipping.

namespace {

struct BridgedPolygon {
  std::vector<Point2> vertices;  // CCW, weakly simple after bridging
};

// Splices each hole into the outer ring with a bridge to a mutually visible
// vertex, processing holes by decreasing max-x vertex.
BridgedPolygon bridge_holes(const Polygon& boundary,
                            const std::vector<Polygon>& holes) {
  BridgedPolygon out;
  out.vertices = boundary.vertices;

  std::vector<size_t> order(holes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto hole_max_x = [&](size_t h) {
    double mx = -std::numeric_limits<double>::max();
    for (const Point2& p : holes[h].vertices) mx = std::max(mx, p.x);
    return mx;
  };
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return hole_max_x(a) > hole_max_x(b);
  });

  for (size_t h : order) {
    const auto& hv = holes[h].vertices;
    // Rightmost hole vertex, ties by lowest y then index.
    size_t mi = 0;
    for (size_t i = 1; i < hv.size(); ++i) {
      if (hv[i].x > hv[mi].x + kEps ||
          (std::abs(hv[i].x - hv[mi].x) <= kEps && hv[i].y < hv[mi].y)) {
        mi = i;
      }
    }
    Point2 m = hv[mi];

    // Cast a +x ray from m against the current outer ring; find the closest
    // intersected edge.
    double best_t = std::numeric_limits<double>::max();
    size_t best_edge = 0;
    Point2 hit{};
    const auto& ov = out.vertices;
    for (size_t i = 0; i < ov.size(); ++i) {
      Point2 a = ov[i];
      Point2 b = ov[(i + 1) % ov.size()];
      if (std::abs(b.y - a.y) <= kEps) continue;  // horizontal
      if ((a.y > m.y) == (b.y > m.y)) continue;   // no straddle
      double t = (m.y - a.y) / (b.y - a.y);
      if (t < -kEps || t > 1.0 + kEps) continue;
      double xi = a.x + (b.x - a.x) * t;
      if (xi < m.x - kEps) continue;
      if (xi - m.x < best_t) {
        best_t = xi - m.x;
        best_edge = i;
        hit = {xi, m.y};
      }
    }
    if (best_t == std::numeric_limits<double>::max()) {
      throw Error(ErrorCode::TriangulationFailure,
                  "hole bridge ray found no outer edge");
    }

    // Candidate visible vertex: the edge endpoint with larger x. If some
    // reflex vertex of the ring lies inside triangle (m, hit, cand), use the
    // one minimizing the angle to the +x axis.
    size_t e0 = best_edge;
    size_t e1 = (best_edge + 1) % ov.size();
    size_t cand = ov[e0].x > ov[e1].x ? e0 : e1;
    auto in_triangle = [&](Point2 p, Point2 a, Point2 b, Point2 c) {
      double d1 = cross(b - a, p - a);
      double d2 = cross(c - b, p - b);
      double d3 = cross(a - c, p - c);
      bool neg = d1 < -kEps || d2 < -kEps || d3 < -kEps;
      bool pos = d1 > kEps || d2 > kEps || d3 > kEps;
      return !(neg && pos);
    };
    double best_metric = std::numeric_limits<double>::max();
    size_t chosen = cand;
    for (size_t i = 0; i < ov.size(); ++i) {
      if (i == cand) continue;
      Point2 prev = ov[(i + ov.size() - 1) % ov.size()];
      Point2 next = ov[(i + 1) % ov.size()];
      bool reflex = cross(ov[i] - prev, next - ov[i]) < -kEps;
      if (!reflex) continue;
      if (distance(ov[i], m) <= kEps) continue;
      if (in_triangle(ov[i], m, hit, ov[cand])) {
        Point2 d = ov[i] - m;
        double metric = std::abs(std::atan2(d.y, d.x));
        double tie = norm(d);
        if (metric + kEps < best_metric ||
            (std::abs(metric - best_metric) <= kEps && tie < best_metric)) {
          best_metric = metric;
          chosen = i;
        }
      }
    }

    // Splice: ..., chosen, m, hole cycle from m (stored CW order), m, chosen,...
    std::vector<Point2> next;
    next.reserve(ov.size() + hv.size() + 2);
    for (size_t i = 0; i <= chosen; ++i) next.push_back(ov[i]);
    for (size_t k = 0; k <= hv.size(); ++k) {
      next.push_back(hv[(mi + k) % hv.size()]);
    }
    next.push_back(ov[chosen]);
    for (size_t i = chosen + 1; i < ov.size(); ++i) next.push_back(ov[i]);
    out.vertices = std::move(next);
  }
  return out;
}

std::vector<Polygon> ear_clip(const BridgedPolygon& poly) {
  std::vector<Point2> v = poly.vertices;
  std::vector<size_t> idx(v.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  auto tri_area2 = [&](size_t a, size_t b, size_t c) {
    return cross(v[b] - v[a], v[c] - v[a]);
  };
  auto in_triangle_strict = [&](Point2 p, Point2 a, Point2 b, Point2 c) {
    double d1 = cross(b - a, p - a);
    double d2 = cross(c - b, p - b);
    double d3 = cross(a - c, p - c);
    return d1 > kEps && d2 > kEps && d3 > kEps;
  };
  auto same_point = [](Point2 a, Point2 b) {
    return std::abs(a.x - b.x) <= kEps && std::abs(a.y - b.y) <= kEps;
  };

  std::vector<Polygon> tris;
  size_t guard = idx.size() * idx.size() + 16;
  while (idx.size() > 3 && guard-- > 0) {
    bool clipped = false;
    for (size_t i = 0; i < idx.size(); ++i) {
      size_t ip = idx[(i + idx.size() - 1) % idx.size()];
      size_t ic = idx[i];
      size_t in = idx[(i + 1) % idx.size()];
      double a2 = tri_area2(ip, ic, in);
      if (a2 <= -kEps) continue;  // reflex
      if (std::abs(a2) <= kEps) {
        // Degenerate (collinear) ear; drop the middle vertex outright.
        idx.erase(idx.begin() + static_cast<long>(i));
        clipped = true;
        break;
      }
      bool blocked = false;
      for (size_t j = 0; j < idx.size(); ++j) {
        size_t k = idx[j];
        if (k == ip || k == ic || k == in) continue;
        if (same_point(v[k], v[ip]) || same_point(v[k], v[ic]) ||
            same_point(v[k], v[in])) {
          continue;  // bridge duplicates
        }
        if (in_triangle_strict(v[k], v[ip], v[ic], v[in]) ||
            distance_point_segment(v[k], v[ip], v[in]) <= kEps) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      tris.push_back(Polygon{{v[ip], v[ic], v[in]}});
      idx.erase(idx.begin() + static_cast<long>(i));
      clipped = true;
      break;
    }
    if (!clipped) {
      throw Error(ErrorCode::TriangulationFailure, "no ear found");
    }
  }
  if (idx.size() == 3) {
    double a2 = tri_area2(idx[0], idx[1], idx[2]);
    if (a2 > kEps) {
      tris.push_back(Polygon{{v[idx[0]], v[idx[1]], v[idx[2]]}});
    }
  }
  return tris;
}

}  // namespace

std::vector<Polygon> triangulate(const Polygon& boundary,
                                 const std::vector<Polygon>& holes) {
  BridgedPolygon merged = bridge_holes(boundary, holes);
  std::vector<Polygon> tris = ear_clip(merged);

  double expected = polygon_area(boundary);
  for (const Polygon& h : holes) expected -= std::abs(polygon_area(h));
  double total = 0.0;
  for (const Polygon& t : tris) total += polygon_area(t);
  if (std::abs(total - expected) > kAreaRelTol * std::max(1.0, expected)) {
    throw Error(ErrorCode::TriangulationFailure,
                "triangle areas do not sum to the free-space area");
  }
  return tris;
}

// ---------------------------------------------------------------------------
// Hertel-Mehlhorn merging.

namespace {

struct VertexIndexer {
  std::map<std::pair<double, double>, int> table;
  std::vector<Point2> points;

  int index_of(Point2 p) {
    auto key = std::make_pair(p.x, p.y);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    int id = static_cast<int>(points.size());
    table.emplace(key, id);
    points.push_back(p);
    return id;
  }
};

using Loop = std::vector<int>;  // CCW vertex-index cycle

bool loop_is_convex(const Loop& loop, const std::vector<Point2>& pts) {
  Polygon p;
  for (int i : loop) p.vertices.push_back(pts[i]);
  if (p.vertices.size() < 3) return false;
  return is_convex(p);
}

bool loop_has_duplicates(const Loop& loop) {
  std::set<int> seen(loop.begin(), loop.end());
  return seen.size() != loop.size();
}

// Merge loops a (has edge u->v) and b (has edge v->u) across that diagonal.
Loop merge_loops(const Loop& a, const Loop& b, int u, int v) {
  auto find_edge = [](const Loop& l, int p, int q) -> size_t {
    for (size_t i = 0; i < l.size(); ++i) {
      if (l[i] == p && l[(i + 1) % l.size()] == q) return i;
    }
    return l.size();
  };
  size_t ia = find_edge(a, u, v);
  size_t ib = find_edge(b, v, u);
  Loop out;
  // a from v around to u, then b's interior path from u to v.
  for (size_t k = 0; k < a.size(); ++k) {
    out.push_back(a[(ia + 1 + k) % a.size()]);
  }
  for (size_t k = 2; k < b.size(); ++k) {
    out.push_back(b[(ib + k) % b.size()]);
  }
  return out;
}

}  // namespace

std::vector<ConvexRegion> merge_convex(const std::vector<Polygon>& triangles) {
  VertexIndexer ix;
  std::vector<Loop> loops;
  for (const Polygon& t : triangles) {
    Loop l;
    for (Point2 p : t.vertices) l.push_back(ix.index_of(p));
    loops.push_back(std::move(l));
  }
  std::vector<bool> alive(loops.size(), true);

  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    // Directed edge -> owning loop.
    std::map<std::pair<int, int>, int> edge_owner;
    for (size_t li = 0; li < loops.size(); ++li) {
      if (!alive[li]) continue;
      const Loop& l = loops[li];
      for (size_t k = 0; k < l.size(); ++k) {
        edge_owner[{l[k], l[(k + 1) % l.size()]}] = static_cast<int>(li);
      }
    }
    // Deterministic diagonal order: sorted (min,max) vertex pairs.
    std::set<std::pair<int, int>> diagonals;
    for (const auto& [edge, owner] : edge_owner) {
      auto rev = std::make_pair(edge.second, edge.first);
      auto it = edge_owner.find(rev);
      if (it != edge_owner.end() && it->second != owner) {
        diagonals.insert({std::min(edge.first, edge.second),
                          std::max(edge.first, edge.second)});
      }
    }
    for (const auto& [u, v] : diagonals) {
      auto ita = edge_owner.find({u, v});
      auto itb = edge_owner.find({v, u});
      if (ita == edge_owner.end() || itb == edge_owner.end()) continue;
      int la = ita->second;
      int lb = itb->second;
      if (la == lb || !alive[la] || !alive[lb]) continue;
      Loop candidate = merge_loops(loops[la], loops[lb], u, v);
      if (loop_has_duplicates(candidate) ||
          !loop_is_convex(candidate, ix.points)) {
        continue;
      }
      loops[la] = std::move(candidate);
      alive[lb] = false;
      merged_any = true;
      break;  // rebuild edge maps after each merge
    }
  }

  std::vector<ConvexRegion> regions;
  for (size_t li = 0; li < loops.size(); ++li) {
    if (!alive[li]) continue;
    ConvexRegion r;
    r.id = static_cast<int>(regions.size());
    for (int i : loops[li]) r.polygon.vertices.push_back(ix.points[i]);
    r.centroid = centroid(r.polygon);
    regions.push_back(std::move(r));
  }
  return regions;
}

std::vector<ConvexRegion> decompose(const ValidatedLayout& layout) {
  if (layout.get().predecomposed) {
    std::vector<ConvexRegion> regions;
    for (const Polygon& piece : *layout.get().predecomposed) {
      ConvexRegion r;
      r.id = static_cast<int>(regions.size());
      r.polygon = piece;
      r.centroid = centroid(piece);
      regions.push_back(std::move(r));
    }
    return regions;
  }
  return merge_convex(triangulate(layout.boundary(), layout.holes()));
}

int locate(Point2 point, const std::vector<ConvexRegion>& regions,
           const ValidatedLayout& layout) {
  if (!point_in_polygon(point, layout.boundary(), kEps)) return -1;
  for (const Polygon& hole : layout.holes()) {
    if (point_in_polygon(point, hole, -kEps) &&
        !point_on_polygon_boundary(point, hole, kEps)) {
      return -1;
    }
  }
  for (const ConvexRegion& r : regions) {
    const auto& v = r.polygon.vertices;
    bool inside = true;
    for (size_t i = 0; i < v.size() && inside; ++i) {
      Point2 a = v[i];
      Point2 b = v[(i + 1) % v.size()];
      Point2 e = b - a;
      double len = norm(e);
      if (len <= kEps) continue;
      if (cross(e, point - a) / len < -kEps) inside = false;
    }
    if (inside) return r.id;
  }
  return -1;
}

namespace {

// Maximal collinear overlap between segments (a1,a2) and (b1,b2), or nullopt
// when they are not collinear or the overlap is a point.
std::optional<Segment> collinear_overlap(Point2 a1, Point2 a2, Point2 b1,
                                         Point2 b2) {
  Point2 dir = a2 - a1;
  double len = norm(dir);
  if (len <= kEps) return std::nullopt;
  Point2 u = dir * (1.0 / len);
  if (std::abs(cross(dir, b1 - a1)) / len > kEps) return std::nullopt;
  if (std::abs(cross(dir, b2 - a1)) / len > kEps) return std::nullopt;
  double t1 = dot(b1 - a1, u);
  double t2 = dot(b2 - a1, u);
  double lo = std::max(0.0, std::min(t1, t2));
  double hi = std::min(len, std::max(t1, t2));
  if (hi - lo <= kLenEps) return std::nullopt;
  return Segment{a1 + u * lo, a1 + u * hi};
}

}  // namespace

std::optional<Segment> shared_side(const ConvexRegion& a,
                                   const ConvexRegion& b) {
  std::optional<Segment> best;
  const auto& av = a.polygon.vertices;
  const auto& bv = b.polygon.vertices;
  for (size_t i = 0; i < av.size(); ++i) {
    for (size_t j = 0; j < bv.size(); ++j) {
      auto seg = collinear_overlap(av[i], av[(i + 1) % av.size()], bv[j],
                                   bv[(j + 1) % bv.size()]);
      if (seg && (!best || seg->length() > best->length())) best = seg;
    }
  }
  return best;
}

bool touches_outer_boundary(const ConvexRegion& region,
                            const ValidatedLayout& layout) {
  const auto& rv = region.polygon.vertices;
  const auto& bv = layout.boundary().vertices;
  for (size_t i = 0; i < rv.size(); ++i) {
    for (size_t j = 0; j < bv.size(); ++j) {
      if (collinear_overlap(rv[i], rv[(i + 1) % rv.size()], bv[j],
                            bv[(j + 1) % bv.size()])) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace dooroute
