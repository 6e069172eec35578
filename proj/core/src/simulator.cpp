#include "dooroute/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

namespace dooroute {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

World make_world(const Layout& layout, DooPolyline doo) {
  ValidatedLayout validated = validate_layout(layout);
  std::vector<ConvexRegion> regions = decompose(validated);
  SpatialGraph graph = build_graph(regions, validated);
  World world{std::move(validated), std::move(regions), std::move(graph),
              std::move(doo)};
  Configuration c = encode(world.doo, world.graph, world.regions, world.layout);
  if (validate(c, world.graph)) {
    throw Error(ErrorCode::BadInput,
                "initial polyline does not encode to a valid configuration");
  }
  return world;
}

namespace {

Point2 outside_waypoint(const ValidatedLayout& layout, Point2 reference) {
  // Nearest outer-boundary point to the reference, pushed 2*eps beyond it
  // along the edge's outward normal.
  const auto& v = layout.boundary().vertices;
  double best = std::numeric_limits<double>::max();
  Point2 foot{};
  Point2 normal{};
  for (size_t i = 0; i < v.size(); ++i) {
    Point2 a = v[i];
    Point2 b = v[(i + 1) % v.size()];
    double d = distance_point_segment(reference, a, b);
    if (d < best) {
      best = d;
      Point2 ab = b - a;
      double len2 = dot(ab, ab);
      double t = len2 > 0 ? std::clamp(dot(reference - a, ab) / len2, 0.0, 1.0)
                          : 0.0;
      foot = a + ab * t;
      double len = norm(ab);
      // Boundary is CCW, so the outward normal is to the right of the edge.
      normal = len > 0 ? Point2{ab.y / len, -ab.x / len} : Point2{1.0, 0.0};
    }
  }
  return foot + normal * (2.0 * kEps);
}

}  // namespace

PickPlaceCommand realize_action(const World& world, const RoutingAction& action,
                                const Configuration& oriented_goal) {
  (void)oriented_goal;
  TrackedConfiguration tracked = simplify_tracked(encode_tracked(
      world.doo, world.graph, world.regions, world.layout));
  const auto& spans = tracked.spans;
  const size_t n = tracked.config.seq.size();
  if (action.span_end > n) {
    throw Error(ErrorCode::SpanOutOfRange, "action span exceeds configuration");
  }
  const double total = world.doo.arc_length();

  PickPlaceCommand cmd;
  cmd.s0 = action.span_start == 0 ? 0.0 : spans[action.span_start - 1].second;
  cmd.s1 = action.span_end == n ? total : spans[action.span_end].first;
  if (action.span_start == action.span_end) {
    // Pure insertion: grasp the junction gap only.
    if (action.span_start == 0) cmd.s0 = 0.0;
    if (action.span_end == n) cmd.s1 = total;
  }
  cmd.s0 = std::clamp(cmd.s0, 0.0, total);
  cmd.s1 = std::clamp(cmd.s1, cmd.s0, total);

  Point2 previous = world.doo.point_at(cmd.s0);
  for (size_t i = 0; i < action.replacement.size(); ++i) {
    VertexId v = action.replacement[i];
    const VertexKind& k = world.graph.kind(v);
    Point2 target;
    switch (k.type) {
      case VertexKind::Type::Region:
        target = world.regions[k.region_id].centroid;
        break;
      case VertexKind::Type::TunnelEntrance:
        target = k.anchor;
        break;
      case VertexKind::Type::Outside:
        target = outside_waypoint(world.layout, previous);
        break;
    }
    cmd.waypoints.push_back(target);
    previous = target;
    if (i > 0) {
      const VertexKind& prev_kind = world.graph.kind(action.replacement[i - 1]);
      if (k.type == VertexKind::Type::TunnelEntrance &&
          prev_kind.type == VertexKind::Type::TunnelEntrance &&
          k.tunnel_id == prev_kind.tunnel_id) {
        cmd.tunnel_tags.push_back({static_cast<int>(i) - 1, k.tunnel_id});
      }
    }
  }

  // A region centroid can coincide with a neighbouring splice point (most
  // commonly a tunnel anchor placed at the centroid). The duplicate would be
  // collapsed during the splice and the region would never be entered, so
  // move such a waypoint to another interior point of its region.
  const double kCoincident = 1e-6;
  const bool has_prefix = cmd.s0 > kEps;
  const bool has_suffix = cmd.s1 < total - kEps;
  for (size_t i = 0; i < cmd.waypoints.size(); ++i) {
    const VertexKind& k = world.graph.kind(action.replacement[i]);
    if (k.type != VertexKind::Type::Region) continue;
    bool has_left = i > 0 || has_prefix;
    Point2 left = i > 0 ? cmd.waypoints[i - 1] : world.doo.point_at(cmd.s0);
    bool has_right = i + 1 < cmd.waypoints.size() || has_suffix;
    Point2 right = i + 1 < cmd.waypoints.size() ? cmd.waypoints[i + 1]
                                                : world.doo.point_at(cmd.s1);
    auto clear_of = [&](Point2 p) {
      return (!has_left || distance(p, left) > kCoincident) &&
             (!has_right || distance(p, right) > kCoincident);
    };
    if (clear_of(cmd.waypoints[i])) continue;
    const ConvexRegion& region = world.regions[k.region_id];
    for (Point2 vert : region.polygon.vertices) {
      Point2 candidate = region.centroid + (vert - region.centroid) * 0.45;
      if (clear_of(candidate)) {
        cmd.waypoints[i] = candidate;
        break;
      }
    }
  }
  return cmd;
}

World apply_command(const World& world, const PickPlaceCommand& cmd) {
  const auto& orig = world.doo.points;
  const double total = world.doo.arc_length();
  double s0 = std::clamp(cmd.s0, 0.0, total);
  double s1 = std::clamp(cmd.s1, 0.0, total);
  if (s1 < s0) throw Error(ErrorCode::BadInput, "grasp range reversed");

  std::vector<double> cum(orig.size(), 0.0);
  for (size_t i = 1; i < orig.size(); ++i) {
    cum[i] = cum[i - 1] + distance(orig[i - 1], orig[i]);
  }

  std::vector<Point2> pts;
  std::vector<int> orig_to_new(orig.size(), -1);
  auto push_pt = [&](Point2 p) {
    if (pts.empty() || distance(pts.back(), p) > kEps) pts.push_back(p);
    return static_cast<int>(pts.size()) - 1;
  };

  // Prefix: original points up to the grasp start, then the cut point.
  size_t cut_lo = 0;  // count of original points fully retained in the prefix
  if (s0 > kEps) {
    while (cut_lo < orig.size() && cum[cut_lo] <= s0 + kEps) ++cut_lo;
    for (size_t i = 0; i < cut_lo; ++i) orig_to_new[i] = push_pt(orig[i]);
    push_pt(world.doo.point_at(s0));
  }

  // Replacement waypoints.
  std::vector<int> wp_idx;
  for (Point2 w : cmd.waypoints) wp_idx.push_back(push_pt(w));

  // Suffix: the cut point, then the remaining original points.
  if (s1 < total - kEps) {
    push_pt(world.doo.point_at(s1));
    for (size_t i = 0; i < orig.size(); ++i) {
      if (cum[i] >= s1 - kEps) orig_to_new[i] = push_pt(orig[i]);
    }
  }

  if (pts.size() < 2) {
    // A single placement target; give the polyline a tiny extent so it stays
    // a valid DOO. Both probes stay within the same located vertex.
    if (pts.empty()) {
      throw Error(ErrorCode::DegenerateSplice, "splice produced no points");
    }
    Point2 base = pts[0];
    int home = locate(base, world.regions, world.layout);
    const double step = 1e-6;
    bool extended = false;
    for (Point2 probe : {base + Point2{step, 0}, base - Point2{step, 0},
                         base + Point2{0, step}, base - Point2{0, step}}) {
      if (locate(probe, world.regions, world.layout) == home) {
        pts.push_back(probe);
        extended = true;
        break;
      }
    }
    if (!extended) {
      throw Error(ErrorCode::DegenerateSplice,
                  "cannot extend single-point splice");
    }
  }

  World out{world.layout, world.regions, world.graph,
            DooPolyline{std::move(pts), {}}};

  // Remap surviving original tags; tags on a segment cut by the grasp are
  // dropped together with the grasped portion.
  for (auto [seg, tunnel] : world.doo.tunnel_tags) {
    if (seg < 0 || seg + 1 >= static_cast<int>(orig.size())) continue;
    int a = orig_to_new[seg];
    int b = orig_to_new[seg + 1];
    if (a >= 0 && b == a + 1) out.doo.tunnel_tags.push_back({a, tunnel});
  }
  for (auto [wseg, tunnel] : cmd.tunnel_tags) {
    if (wseg < 0 || wseg + 1 >= static_cast<int>(wp_idx.size())) continue;
    int a = wp_idx[wseg];
    int b = wp_idx[wseg + 1];
    if (b == a + 1) out.doo.tunnel_tags.push_back({a, tunnel});
  }
  std::sort(out.doo.tunnel_tags.begin(), out.doo.tunnel_tags.end());
  return out;
}

Episode run_episode(World world, const Configuration& goal, int max_actions) {
  if (max_actions < 1) {
    throw Error(ErrorCode::BadInput, "max_actions must be >= 1");
  }
  Configuration goal_s = simplify(goal);
  if (validate(goal_s, world.graph)) {
    throw Error(ErrorCode::BadInput, "goal configuration is not graph-valid");
  }

  Episode episode;
  episode.goal = goal_s;
  episode.initial = simplify(
      encode(world.doo, world.graph, world.regions, world.layout));
  episode.outcome = Episode::Outcome::ActionCapReached;

  for (int step = 0; step <= max_actions; ++step) {
    Configuration current = simplify(
        encode(world.doo, world.graph, world.regions, world.layout));
    auto t0 = std::chrono::steady_clock::now();
    PlanOutcome outcome = next_action(current, goal_s, world.graph);
    auto t1 = std::chrono::steady_clock::now();
    double plan_us =
        std::chrono::duration<double, std::micro>(t1 - t0).count();

    if (std::holds_alternative<Done>(outcome)) {
      episode.outcome = Episode::Outcome::Converged;
      break;
    }
    if (step == max_actions) break;  // cap reached with work remaining

    auto& next = std::get<NextStep>(outcome);
    PickPlaceCommand cmd =
        realize_action(world, next.action, next.oriented_goal);
    world = apply_command(world, cmd);

    EpisodeStep record;
    record.action = next.action;
    record.command = cmd;
    record.post_configuration = simplify(
        encode(world.doo, world.graph, world.regions, world.layout));
    record.plan_time_us = plan_us;
    episode.steps.push_back(std::move(record));
  }
  return episode;
}

DooPolyline random_polyline(const World& world, double min_length,
                            double max_length, uint64_t seed) {
  if (min_length > max_length || min_length <= 0) {
    throw Error(ErrorCode::BadInput, "bad length range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto jitter = [&](const ConvexRegion& r) {
    double radius = 0.25 * inradius_at_centroid(r.polygon);
    std::uniform_real_distribution<double> d(-radius, radius);
    return Point2{r.centroid.x + d(rng), r.centroid.y + d(rng)};
  };
  auto region_neighbors = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId w : world.graph.neighbors(v)) {
      if (w >= 0 &&
          world.graph.kind(w).type == VertexKind::Type::Region) {
        out.push_back(w);
      }
    }
    return out;
  };

  const int k = static_cast<int>(world.regions.size());
  for (int attempt = 0; attempt < 100; ++attempt) {
    double target = min_length + (max_length - min_length) * unit(rng);
    VertexId cur = static_cast<VertexId>(unit(rng) * k) % k;
    if (region_neighbors(cur).empty()) continue;

    DooPolyline doo;
    doo.points.push_back(jitter(world.regions[cur]));
    double arc = 0.0;
    bool ok = true;
    for (int hops = 0; arc < target; ++hops) {
      if (hops > 200) {
        ok = false;
        break;
      }
      auto options = region_neighbors(cur);
      if (options.empty()) {
        ok = false;
        break;
      }
      VertexId next =
          options[static_cast<size_t>(unit(rng) * options.size()) %
                  options.size()];
      Point2 p = jitter(world.regions[next]);
      double seg = distance(doo.points.back(), p);
      if (arc + seg >= target) {
        double t = (target - arc) / seg;
        Point2 last = doo.points.back();
        Point2 cutpoint = last + (p - last) * std::max(t, kEps / seg);
        doo.points.push_back(cutpoint);
        arc = target;
      } else {
        doo.points.push_back(p);
        arc += seg;
      }
      cur = next;
    }
    if (!ok || doo.points.size() < 2) continue;
    try {
      Configuration c =
          encode(doo, world.graph, world.regions, world.layout);
      if (!validate(c, world.graph)) return doo;
    } catch (const Error&) {
      // resample
    }
  }
  throw Error(ErrorCode::GenerationFailure,
              "no valid random polyline after 100 attempts");
}

BenchmarkStats run_benchmark(const Layout& layout, int n_trials, uint64_t seed,
                             int max_actions, double min_length,
                             double max_length, int threads) {
  if (n_trials < 1) throw Error(ErrorCode::BadInput, "n_trials must be >= 1");

  ValidatedLayout validated = validate_layout(layout);
  std::vector<ConvexRegion> regions = decompose(validated);
  SpatialGraph graph = build_graph(regions, validated);

  struct TrialResult {
    bool excluded = false;
    bool success = false;
    int actions = 0;
    Configuration final_config;
    std::vector<double> plan_times_us;
  };
  std::vector<TrialResult> results(n_trials);

  auto run_trial = [&](int i) {
    uint64_t sub = seed ^ splitmix64(static_cast<uint64_t>(i));
    uint64_t init_seed = splitmix64(sub);
    uint64_t goal_seed = splitmix64(sub ^ 0xD1B54A32D192ED03ULL);
    TrialResult& r = results[i];
    try {
      World base{validated, regions, graph, DooPolyline{}};
      base.doo = random_polyline(base, min_length, max_length, init_seed);
      DooPolyline goal_doo =
          random_polyline(base, min_length, max_length, goal_seed);
      Configuration goal = simplify(
          encode(goal_doo, graph, regions, validated));
      Episode ep = run_episode(base, goal, max_actions);
      r.success = ep.outcome == Episode::Outcome::Converged;
      r.actions = static_cast<int>(ep.steps.size());
      r.final_config = ep.steps.empty() ? simplify(encode(base.doo, graph,
                                                          regions, validated))
                                        : ep.steps.back().post_configuration;
      for (const auto& s : ep.steps) r.plan_times_us.push_back(s.plan_time_us);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GenerationFailure) {
        r.excluded = true;
      } else {
        throw;
      }
    }
  };

  int workers = threads;
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }
  workers = std::min(workers, n_trials);
  if (workers <= 1) {
    for (int i = 0; i < n_trials; ++i) run_trial(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < n_trials; i += workers) run_trial(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  BenchmarkStats stats;
  stats.trials = n_trials;
  stats.seed = seed;
  std::vector<double> all_times;
  int included = 0;
  int successes = 0;
  long long action_sum = 0;
  for (const TrialResult& r : results) {
    if (r.excluded) {
      ++stats.excluded;
      stats.per_trial_actions.push_back(-1);
      stats.per_trial_success.push_back(false);
      stats.per_trial_final.push_back(Configuration{});
      continue;
    }
    ++included;
    successes += r.success ? 1 : 0;
    action_sum += r.actions;
    stats.max_actions = std::max(stats.max_actions, r.actions);
    stats.per_trial_actions.push_back(r.actions);
    stats.per_trial_success.push_back(r.success);
    stats.per_trial_final.push_back(r.final_config);
    all_times.insert(all_times.end(), r.plan_times_us.begin(),
                     r.plan_times_us.end());
  }
  if (included > 0) {
    stats.success_rate = static_cast<double>(successes) / included;
    stats.mean_actions = static_cast<double>(action_sum) / included;
  }
  if (!all_times.empty()) {
    std::sort(all_times.begin(), all_times.end());
    auto pct = [&](double p) {
      size_t idx = static_cast<size_t>(p * (all_times.size() - 1));
      return all_times[idx];
    };
    stats.plan_time_p50_us = pct(0.5);
    stats.plan_time_p99_us = pct(0.99);
    stats.plan_time_max_us = all_times.back();
  }
  return stats;
}

Layout bundled_board() {
  constexpr double kSide = 0.38;
  constexpr int kGrid = 5;
  constexpr double kCell = kSide / kGrid;

  auto cell_poly_ccw = [&](int col, int row) {
    double x0 = col * kCell;
    double y0 = row * kCell;
    double x1 = x0 + kCell;
    double y1 = y0 + kCell;
    return Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
  };
  auto cell_poly_cw = [&](int col, int row) {
    Polygon p = cell_poly_ccw(col, row);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  };

  Layout layout;
  layout.boundary =
      Polygon{{{0, 0}, {kSide, 0}, {kSide, kSide}, {0, kSide}}};

  const std::pair<int, int> hole_cells[] = {{1, 1}, {3, 1}, {1, 3}, {3, 3}};
  auto is_hole = [&](int col, int row) {
    for (auto [hc, hr] : hole_cells) {
      if (hc == col && hr == row) return true;
    }
    return false;
  };
  for (auto [col, row] : hole_cells) {
    layout.holes.push_back(cell_poly_cw(col, row));
  }

  std::vector<Polygon> regions;
  for (int row = 0; row < kGrid; ++row) {
    for (int col = 0; col < kGrid; ++col) {
      if (!is_hole(col, row)) regions.push_back(cell_poly_ccw(col, row));
    }
  }
  layout.predecomposed = std::move(regions);

  // One tunnel over the lower-left hole, entrances in the cells flanking it.
  auto cell_center = [&](int col, int row) {
    return Point2{(col + 0.5) * kCell, (row + 0.5) * kCell};
  };
  TunnelSpec tunnel;
  tunnel.id = 0;
  tunnel.entrance_a = cell_center(0, 1) + Point2{0.25 * kCell, 0};
  tunnel.entrance_b = cell_center(2, 1) - Point2{0.25 * kCell, 0};
  layout.tunnels.push_back(tunnel);
  return layout;
}

}  // namespace dooroute
