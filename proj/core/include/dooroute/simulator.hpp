#pragma once

#include <cstdint>
#include <vector>

#include "dooroute/router.hpp"

namespace dooroute {

// Quasi-static world: geometry plus the derived decomposition and graph.
struct World {
  ValidatedLayout layout;
  std::vector<ConvexRegion> regions;
  SpatialGraph graph;
  DooPolyline doo;
};

World make_world(const Layout& layout, DooPolyline doo);

// Grasp the polyline over [s0, s1] (arc length) and re-lay that portion as
// straight segments through the waypoints.
struct PickPlaceCommand {
  double s0 = 0.0;
  double s1 = 0.0;
  std::vector<Point2> waypoints;
  // Tags relative to the waypoint chain: segment between waypoints[i] and
  // waypoints[i+1] traverses the given tunnel.
  std::vector<std::pair<int, int>> tunnel_tags;
};

PickPlaceCommand realize_action(const World& world, const RoutingAction& action,
                                const Configuration& oriented_goal);

World apply_command(const World& world, const PickPlaceCommand& cmd);

struct EpisodeStep {
  RoutingAction action;
  PickPlaceCommand command;
  Configuration post_configuration;  // simplified re-encode after the action
  double plan_time_us = 0.0;
};

struct Episode {
  Configuration initial;
  Configuration goal;
  std::vector<EpisodeStep> steps;
  enum class Outcome { Converged, ActionCapReached } outcome =
      Outcome::Converged;
};

Episode run_episode(World world, const Configuration& goal, int max_actions);

DooPolyline random_polyline(const World& world, double min_length,
                            double max_length, uint64_t seed);

struct BenchmarkStats {
  int trials = 0;
  int excluded = 0;  // generation failures
  double success_rate = 0.0;
  double mean_actions = 0.0;
  int max_actions = 0;
  double plan_time_p50_us = 0.0;
  double plan_time_p99_us = 0.0;
  double plan_time_max_us = 0.0;
  uint64_t seed = 0;
  std::vector<int> per_trial_actions;
  std::vector<bool> per_trial_success;
  std::vector<Configuration> per_trial_final;  // empty entry when excluded
};

// Seeded trials on the given layout: independent initial/goal placements per
// trial, sub-seeded by index so trial order is immaterial. `threads` 0 means
// one worker per hardware thread.
BenchmarkStats run_benchmark(const Layout& layout, int n_trials, uint64_t seed,
                             int max_actions, double min_length,
                             double max_length, int threads = 1);

// Deterministic 0.38 m stand-in board: a 5x5 cell grid with four cell holes
// and one tunnel. 21 predecomposed convex regions.
Layout bundled_board();

}  // namespace dooroute
