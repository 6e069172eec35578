#include "dooroute/svg_render.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dooroute {

namespace {

struct Frame {
  double min_x, min_y, scale, height;
  double x(double v) const { return (v - min_x) * scale; }
  double y(double v) const { return height - (v - min_y) * scale; }
};

void poly_path(std::ostringstream& out, const Polygon& p, const Frame& f,
               const std::string& style) {
  out << "<polygon points=\"";
  for (Point2 v : p.vertices) out << f.x(v.x) << "," << f.y(v.y) << " ";
  out << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const ValidatedLayout& layout,
                       const std::vector<ConvexRegion>& regions,
                       const SpatialGraph& graph,
                       const std::optional<DooPolyline>& doo) {
  double min_x = std::numeric_limits<double>::max();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (Point2 v : layout.boundary().vertices) {
    min_x = std::min(min_x, v.x);
    min_y = std::min(min_y, v.y);
    max_x = std::max(max_x, v.x);
    max_y = std::max(max_y, v.y);
  }
  const double pad = 0.04 * std::max(max_x - min_x, max_y - min_y);
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;
  const double width = 800.0;
  Frame f{min_x, min_y, width / (max_x - min_x),
          (max_y - min_y) * width / (max_x - min_x)};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << f.height << "\">\n";
  poly_path(out, layout.boundary(), f,
            "fill=\"#f8f8f8\" stroke=\"#222\" stroke-width=\"2\"");
  for (const ConvexRegion& r : regions) {
    poly_path(out, r.polygon, f,
              "fill=\"#dfe8f5\" stroke=\"#8aa\" stroke-width=\"1\"");
  }
  for (const Polygon& h : layout.holes()) {
    poly_path(out, h, f, "fill=\"#b8b8b8\" stroke=\"#555\" stroke-width=\"1\"");
  }
  // Graph edges between region centroids.
  for (auto [u, v] : graph.edges()) {
    if (u < 0 || v < 0) continue;
    auto pos = [&](VertexId w) {
      const VertexKind& k = graph.kind(w);
      return k.type == VertexKind::Type::Region ? regions[k.region_id].centroid
                                                : k.anchor;
    };
    Point2 a = pos(u);
    Point2 b = pos(v);
    out << "<line x1=\"" << f.x(a.x) << "\" y1=\"" << f.y(a.y) << "\" x2=\""
        << f.x(b.x) << "\" y2=\"" << f.y(b.y)
        << "\" stroke=\"#4a7\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const ConvexRegion& r : regions) {
    out << "<circle cx=\"" << f.x(r.centroid.x) << "\" cy=\""
        << f.y(r.centroid.y) << "\" r=\"4\" fill=\"#246\"/>\n";
  }
  for (int v = 0; v < graph.vertex_count() - 1; ++v) {
    const VertexKind& k = graph.kind(v);
    if (k.type != VertexKind::Type::TunnelEntrance) continue;
    out << "<circle cx=\"" << f.x(k.anchor.x) << "\" cy=\"" << f.y(k.anchor.y)
        << "\" r=\"5\" fill=\"#db0\"/>\n";
  }
  if (doo && doo->points.size() >= 2) {
    out << "<polyline points=\"";
    for (Point2 p : doo->points) out << f.x(p.x) << "," << f.y(p.y) << " ";
    out << "\" fill=\"none\" stroke=\"#c33\" stroke-width=\"3\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dooroute
