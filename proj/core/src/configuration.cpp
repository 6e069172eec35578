#include "dooroute/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dooroute {

double DooPolyline::arc_length() const {
  double total = 0.0;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    total += distance(points[i], points[i + 1]);
  }
  return total;
}

Point2 DooPolyline::point_at(double s) const {
  if (points.empty()) throw Error(ErrorCode::EmptyPolyline, "point_at");
  if (s <= 0.0) return points.front();
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    double len = distance(points[i], points[i + 1]);
    if (s <= len) {
      double t = len > 0 ? s / len : 0.0;
      return points[i] + (points[i + 1] - points[i]) * t;
    }
    s -= len;
  }
  return points.back();
}

namespace {

struct TunnelTagInfo {
  int tunnel_id = -1;
  bool forward = true;  // true: endpoint order is entrance_a then entrance_b
};

// Validates a tag against the tunnel's anchors and returns traversal order.
TunnelTagInfo resolve_tag(const DooPolyline& doo, int seg, int tunnel_id,
                          const ValidatedLayout& layout) {
  if (seg < 0 || seg + 1 >= static_cast<int>(doo.points.size())) {
    throw Error(ErrorCode::BadTunnelTag,
                "segment index " + std::to_string(seg) + " out of range");
  }
  const TunnelSpec* spec = nullptr;
  for (const TunnelSpec& t : layout.tunnels()) {
    if (t.id == tunnel_id) spec = &t;
  }
  if (!spec) {
    throw Error(ErrorCode::BadTunnelTag,
                "unknown tunnel " + std::to_string(tunnel_id));
  }
  Point2 p = doo.points[seg];
  Point2 q = doo.points[seg + 1];
  bool forward = distance(p, spec->entrance_a) <= kSnapTol &&
                 distance(q, spec->entrance_b) <= kSnapTol;
  bool backward = distance(p, spec->entrance_b) <= kSnapTol &&
                  distance(q, spec->entrance_a) <= kSnapTol;
  if (!forward && !backward) {
    throw Error(ErrorCode::BadTunnelTag,
                "tagged segment endpoints are not near tunnel " +
                    std::to_string(tunnel_id) + " anchors");
  }
  return {tunnel_id, forward};
}

}  // namespace

TrackedConfiguration encode_tracked(const DooPolyline& doo,
                                    const SpatialGraph& g,
                                    const std::vector<ConvexRegion>& regions,
                                    const ValidatedLayout& layout,
                                    double sample_step) {
  if (doo.points.size() < 2) {
    throw Error(ErrorCode::EmptyPolyline, "polyline needs >= 2 points");
  }
  if (sample_step <= 0.0) {
    throw Error(ErrorCode::BadInput, "sample_step must be positive");
  }

  const int region_count =
      g.vertex_count() - 1 - 2 * static_cast<int>(layout.tunnels().size());

  std::vector<VertexId> seq;
  std::vector<std::pair<double, double>> spans;
  auto push = [&](VertexId v, double s) {
    if (!seq.empty() && seq.back() == v) {
      spans.back().second = s;
      return;
    }
    seq.push_back(v);
    spans.push_back({s, s});
  };

  double arc = 0.0;
  for (size_t i = 0; i + 1 < doo.points.size(); ++i) {
    Point2 p = doo.points[i];
    Point2 q = doo.points[i + 1];
    double len = distance(p, q);

    auto tag_it =
        std::find_if(doo.tunnel_tags.begin(), doo.tunnel_tags.end(),
                     [&](auto t) { return t.first == static_cast<int>(i); });
    if (tag_it != doo.tunnel_tags.end()) {
      TunnelTagInfo info = resolve_tag(doo, static_cast<int>(i),
                                       tag_it->second, layout);
      int tunnel_index = 0;
      for (const TunnelSpec& t : layout.tunnels()) {
        if (t.id == info.tunnel_id) break;
        ++tunnel_index;
      }
      VertexId va = region_count + 2 * tunnel_index;      // entrance_a
      VertexId vb = va + 1;                               // entrance_b
      VertexId near = info.forward ? va : vb;
      VertexId far = info.forward ? vb : va;
      push(near, arc);
      spans.back().second = arc + 0.5 * len;
      push(far, arc + 0.5 * len);
      spans.back().second = arc + len;
      arc += len;
      continue;
    }

    int n = std::max(1, static_cast<int>(std::ceil(len / sample_step)));
    for (int s = (i == 0 ? 0 : 1); s <= n; ++s) {
      double t = static_cast<double>(s) / n;
      Point2 sample = p + (q - p) * t;
      push(locate(sample, regions, layout), arc + len * t);
    }
    arc += len;
  }

  // Bridge consecutive non-adjacent vertices (a thin region skipped by the
  // sampling) with shortest-path interiors at the junction point.
  std::vector<VertexId> bridged;
  std::vector<std::pair<double, double>> bridged_spans;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && !g.has_edge(bridged.back(), seq[i])) {
      auto path = g.shortest_path(bridged.back(), seq[i]);
      for (size_t k = 1; k + 1 < path.size(); ++k) {
        bridged.push_back(path[k]);
        bridged_spans.push_back({spans[i].first, spans[i].first});
      }
    }
    bridged.push_back(seq[i]);
    bridged_spans.push_back(spans[i]);
  }

  return {Configuration{std::move(bridged)}, std::move(bridged_spans)};
}

Configuration encode(const DooPolyline& doo, const SpatialGraph& g,
                     const std::vector<ConvexRegion>& regions,
                     const ValidatedLayout& layout, double sample_step) {
  return encode_tracked(doo, g, regions, layout, sample_step).config;
}

Configuration simplify(const Configuration& c) {
  std::vector<VertexId> seq = c.seq;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (size_t i = 0; i + 2 < seq.size(); ++i) {
      if (seq[i] == seq[i + 2]) {
        seq.erase(seq.begin() + static_cast<long>(i) + 1,
                  seq.begin() + static_cast<long>(i) + 3);
        reduced = true;
        break;
      }
    }
  }
  return Configuration{std::move(seq)};
}

TrackedConfiguration simplify_tracked(const TrackedConfiguration& c) {
  std::vector<VertexId> seq = c.config.seq;
  std::vector<std::pair<double, double>> spans = c.spans;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (size_t i = 0; i + 2 < seq.size(); ++i) {
      if (seq[i] == seq[i + 2]) {
        spans[i].second = spans[i + 2].second;
        seq.erase(seq.begin() + static_cast<long>(i) + 1,
                  seq.begin() + static_cast<long>(i) + 3);
        spans.erase(spans.begin() + static_cast<long>(i) + 1,
                    spans.begin() + static_cast<long>(i) + 3);
        reduced = true;
        break;
      }
    }
  }
  return {Configuration{std::move(seq)}, std::move(spans)};
}

std::optional<size_t> validate(const Configuration& c, const SpatialGraph& g) {
  if (c.seq.empty()) return 0;
  for (size_t i = 0; i < c.seq.size(); ++i) {
    if (!g.contains(c.seq[i])) return i;
  }
  for (size_t i = 0; i + 1 < c.seq.size(); ++i) {
    if (c.seq[i] == c.seq[i + 1] || !g.has_edge(c.seq[i], c.seq[i + 1])) {
      return i;
    }
  }
  return std::nullopt;
}

Configuration reverse(const Configuration& c) {
  Configuration out = c;
  std::reverse(out.seq.begin(), out.seq.end());
  return out;
}

bool bidirectional_equal(const Configuration& a, const Configuration& b) {
  return a == b || a == reverse(b);
}

}  // namespace dooroute
