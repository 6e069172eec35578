#include "dooroute/json_io.hpp"

#include <json.hpp>

namespace dooroute {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::BadInput, "malformed JSON");
  }
  return j;
}

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::BadInput, "point must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Polygon polygon_from(const json& j) {
  Polygon p;
  for (const auto& v : j) p.vertices.push_back(point_from(v));
  return p;
}

json point_to(Point2 p) { return json::array({p.x, p.y}); }

json polygon_to(const Polygon& p) {
  json out = json::array();
  for (Point2 v : p.vertices) out.push_back(point_to(v));
  return out;
}

}  // namespace

Layout layout_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("boundary")) {
    throw Error(ErrorCode::BadInput, "layout missing \"boundary\"");
  }
  Layout layout;
  layout.boundary = polygon_from(j["boundary"]);
  if (j.contains("holes")) {
    for (const auto& h : j["holes"]) layout.holes.push_back(polygon_from(h));
  }
  if (j.contains("tunnels")) {
    for (const auto& t : j["tunnels"]) {
      TunnelSpec spec;
      spec.id = t.at("id").get<int>();
      spec.entrance_a = point_from(t.at("a"));
      spec.entrance_b = point_from(t.at("b"));
      layout.tunnels.push_back(spec);
    }
  }
  if (j.contains("regions") && !j["regions"].is_null()) {
    std::vector<Polygon> pieces;
    for (const auto& r : j["regions"]) pieces.push_back(polygon_from(r));
    layout.predecomposed = std::move(pieces);
  }
  return layout;
}

std::string layout_to_json(const Layout& layout,
                           const std::vector<ConvexRegion>& regions) {
  json j;
  j["boundary"] = polygon_to(layout.boundary);
  j["holes"] = json::array();
  for (const Polygon& h : layout.holes) j["holes"].push_back(polygon_to(h));
  j["tunnels"] = json::array();
  for (const TunnelSpec& t : layout.tunnels) {
    j["tunnels"].push_back({{"id", t.id},
                            {"a", point_to(t.entrance_a)},
                            {"b", point_to(t.entrance_b)}});
  }
  j["regions"] = json::array();
  for (const ConvexRegion& r : regions) {
    j["regions"].push_back(polygon_to(r.polygon));
  }
  return j.dump();
}

DooPolyline polyline_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("points")) {
    throw Error(ErrorCode::BadInput, "polyline missing \"points\"");
  }
  DooPolyline doo;
  for (const auto& p : j["points"]) doo.points.push_back(point_from(p));
  if (j.contains("tunnel_tags")) {
    for (const auto& t : j["tunnel_tags"]) {
      if (!t.is_array() || t.size() != 2) {
        throw Error(ErrorCode::BadInput, "tunnel tag must be [seg, tunnel]");
      }
      doo.tunnel_tags.push_back({t[0].get<int>(), t[1].get<int>()});
    }
  }
  return doo;
}

Configuration configuration_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("seq")) {
    throw Error(ErrorCode::BadInput, "configuration missing \"seq\"");
  }
  Configuration c;
  for (const auto& v : j["seq"]) c.seq.push_back(v.get<int>());
  return c;
}

std::string configuration_to_json(const Configuration& c) {
  json j;
  j["seq"] = c.seq;
  return j.dump();
}

std::string graph_to_json(const SpatialGraph& g) {
  json j;
  j["n"] = g.vertex_count() - 1;
  j["vertices"] = json::array();
  for (int v = -1; v < g.vertex_count() - 1; ++v) {
    const VertexKind& k = g.kind(v);
    json vj;
    vj["id"] = v;
    switch (k.type) {
      case VertexKind::Type::Outside:
        vj["kind"] = "outside";
        break;
      case VertexKind::Type::Region:
        vj["kind"] = "region";
        break;
      case VertexKind::Type::TunnelEntrance:
        vj["kind"] = "entrance";
        vj["tunnel"] = k.tunnel_id;
        vj["host"] = k.host;
        break;
    }
    j["vertices"].push_back(vj);
  }
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) {
    j["edges"].push_back(json::array({u, v}));
  }
  return j.dump();
}

std::string stats_to_json(const BenchmarkStats& stats) {
  json j;
  j["trials"] = stats.trials;
  j["excluded"] = stats.excluded;
  j["success_rate"] = stats.success_rate;
  j["mean_actions"] = stats.mean_actions;
  j["max_actions"] = stats.max_actions;
  j["plan_time_p50_us"] = stats.plan_time_p50_us;
  j["plan_time_p99_us"] = stats.plan_time_p99_us;
  j["plan_time_max_us"] = stats.plan_time_max_us;
  j["seed"] = stats.seed;
  j["per_trial_actions"] = stats.per_trial_actions;
  json succ = json::array();
  for (bool s : stats.per_trial_success) succ.push_back(s);
  j["per_trial_success"] = succ;
  json finals = json::array();
  for (const Configuration& c : stats.per_trial_final) finals.push_back(c.seq);
  j["per_trial_final"] = finals;
  return j.dump();
}

std::string episode_step_to_json(const EpisodeStep& step) {
  json j;
  j["span"] = json::array({step.action.span_start, step.action.span_end});
  j["replacement"] = step.action.replacement;
  j["grasp_range"] = json::array({step.command.s0, step.command.s1});
  json wps = json::array();
  for (Point2 w : step.command.waypoints) wps.push_back(point_to(w));
  j["waypoints"] = wps;
  j["post"] = step.post_configuration.seq;
  j["plan_time_us"] = step.plan_time_us;
  return j.dump();
}

bool json_is_polyline(const std::string& text) {
  json j = parse(text);
  return j.contains("points");
}

}  // namespace dooroute
