#include "dooroute/spatial_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace dooroute {

SpatialGraph::SpatialGraph(std::vector<VertexKind> kinds,
                           std::vector<std::pair<VertexId, VertexId>> edges)
    : kinds_(std::move(kinds)) {
  adjacency_.resize(kinds_.size());
  std::set<std::pair<VertexId, VertexId>> unique;
  for (auto [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::BadInput, "self-loop edge");
    if (!contains(u) || !contains(v)) {
      throw Error(ErrorCode::UnknownVertex,
                  "edge references vertex outside the graph");
    }
    unique.insert({std::min(u, v), std::max(u, v)});
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [u, v] : edges_) {
    adjacency_[u + 1].push_back(v);
    adjacency_[v + 1].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const VertexKind& SpatialGraph::kind(VertexId v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  }
  return kinds_[v + 1];
}

const std::vector<VertexId>& SpatialGraph::neighbors(VertexId v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  }
  return adjacency_[v + 1];
}

bool SpatialGraph::has_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) {
    throw Error(ErrorCode::UnknownVertex,
                std::to_string(u) + "," + std::to_string(v));
  }
  if (u == v) return false;
  const auto& list = adjacency_[u + 1];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<VertexId> SpatialGraph::shortest_path(VertexId u,
                                                  VertexId v) const {
  if (!contains(u) || !contains(v)) {
    throw Error(ErrorCode::UnknownVertex,
                std::to_string(u) + "," + std::to_string(v));
  }
  if (u == v) return {u};
  const int n = vertex_count();
  std::vector<VertexId> parent(n, -2);
  std::deque<VertexId> queue;
  parent[u + 1] = u;
  queue.push_back(u);
  // Expand region/entrance neighbors in ascending order, the outside vertex
  // last; mirrors the adjacency list with -1 rotated to the back.
  auto expand_order = [](const std::vector<VertexId>& list) {
    std::vector<VertexId> out;
    out.reserve(list.size());
    for (VertexId w : list)
      if (w != kOutsideVertex) out.push_back(w);
    if (!list.empty() && list.front() == kOutsideVertex) {
      out.push_back(kOutsideVertex);
    }
    return out;
  };
  while (!queue.empty()) {
    VertexId cur = queue.front();
    queue.pop_front();
    for (VertexId w : expand_order(adjacency_[cur + 1])) {
      if (parent[w + 1] != -2) continue;
      parent[w + 1] = cur;
      if (w == v) {
        std::vector<VertexId> path;
        for (VertexId x = v; x != u; x = parent[x + 1]) path.push_back(x);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw Error(ErrorCode::Unreachable,
              std::to_string(u) + " -> " + std::to_string(v));
}

bool SpatialGraph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{kOutsideVertex};
  seen[0] = true;
  int visited = 1;
  while (!queue.empty()) {
    VertexId cur = queue.front();
    queue.pop_front();
    for (VertexId w : adjacency_[cur + 1]) {
      if (!seen[w + 1]) {
        seen[w + 1] = true;
        ++visited;
        queue.push_back(w);
      }
    }
  }
  return visited == n;
}

SpatialGraph build_graph(const std::vector<ConvexRegion>& regions,
                         const ValidatedLayout& layout) {
  const int k = static_cast<int>(regions.size());
  std::vector<VertexKind> kinds(static_cast<size_t>(k) + 1 +
                                2 * layout.tunnels().size());
  kinds[0].type = VertexKind::Type::Outside;
  for (int r = 0; r < k; ++r) {
    kinds[r + 1].type = VertexKind::Type::Region;
    kinds[r + 1].region_id = r;
  }

  std::vector<std::pair<VertexId, VertexId>> edges;

  // Rule 1: regions sharing a side.
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (shared_side(regions[a], regions[b])) edges.push_back({a, b});
    }
  }
  // Rule 2: regions with an edge on the outer boundary connect to -1.
  for (int a = 0; a < k; ++a) {
    if (touches_outer_boundary(regions[a], layout)) {
      edges.push_back({kOutsideVertex, a});
    }
  }
  // Rules 3 and 4: tunnel entrance pairs and their host regions.
  VertexId next = k;
  for (const TunnelSpec& t : layout.tunnels()) {
    for (int end = 0; end < 2; ++end) {
      Point2 anchor = end == 0 ? t.entrance_a : t.entrance_b;
      for (const Polygon& hole : layout.holes()) {
        if (point_in_polygon(anchor, hole, -kEps) &&
            !point_on_polygon_boundary(anchor, hole, kEps)) {
          throw Error(ErrorCode::EntranceInHole,
                      "tunnel " + std::to_string(t.id) + " entrance " +
                          (end == 0 ? "a" : "b") + " lies inside a hole");
        }
      }
      VertexKind& vk = kinds[next + 1];
      vk.type = VertexKind::Type::TunnelEntrance;
      vk.tunnel_id = t.id;
      vk.end = end;
      vk.anchor = anchor;
      vk.host = locate(anchor, regions, layout);
      edges.push_back({vk.host, next});
      ++next;
    }
    edges.push_back({next - 2, next - 1});
  }

  return SpatialGraph(std::move(kinds), std::move(edges));
}

}  // namespace dooroute
