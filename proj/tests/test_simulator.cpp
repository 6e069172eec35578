#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dooroute;
using namespace dooroute::testing;

namespace {

World world_on(const Layout& layout, DooPolyline doo) {
  return make_world(layout, std::move(doo));
}

Configuration current_config(const World& w) {
  return simplify(encode(w.doo, w.graph, w.regions, w.layout));
}

}  // namespace

TEST_CASE("bundled_board meets its construction contract") {
  Layout layout = bundled_board();
  auto board = make_board(layout);
  CHECK(board.regions.size() >= 12);
  CHECK(layout.holes.size() >= 4);
  CHECK(layout.tunnels.size() == 1);
  CHECK(board.graph.is_connected());
  int k = static_cast<int>(board.regions.size());
  VertexId host_a = board.graph.kind(k).host;
  VertexId host_b = board.graph.kind(k + 1).host;
  CHECK(host_a >= 0);
  CHECK(host_b >= 0);
  CHECK(host_a != host_b);
}

TEST_CASE("realize_action places waypoints at centroids and anchors") {
  auto layout = fix_b();
  World w = world_on(layout, DooPolyline{{{0.2, 0.5}, {0.5, 0.2}}, {}});

  SUBCASE("region replacement uses centroids") {
    RoutingAction action{0, 1, {2, 3}, 0};
    PickPlaceCommand cmd = realize_action(w, action, Configuration{{2, 3}});
    REQUIRE(cmd.waypoints.size() == 2);
    CHECK(cmd.waypoints[0].x == doctest::Approx(0.5));
    CHECK(cmd.waypoints[0].y == doctest::Approx(1.5));
    CHECK(cmd.waypoints[1].x == doctest::Approx(1.5));
    CHECK(cmd.waypoints[1].y == doctest::Approx(1.5));
    CHECK(cmd.tunnel_tags.empty());
  }

  SUBCASE("entrance replacement uses anchors and tags the segment") {
    RoutingAction action{0, 1, {4, 5}, 0};
    PickPlaceCommand cmd = realize_action(w, action, Configuration{{4, 5}});
    REQUIRE(cmd.waypoints.size() == 2);
    CHECK(cmd.waypoints[0].x == doctest::Approx(0.5));
    CHECK(cmd.waypoints[0].y == doctest::Approx(0.5));
    CHECK(cmd.waypoints[1].x == doctest::Approx(1.5));
    CHECK(cmd.waypoints[1].y == doctest::Approx(1.5));
    REQUIRE(cmd.tunnel_tags.size() == 1);
    CHECK(cmd.tunnel_tags[0] == std::pair<int, int>{0, 0});
  }

  SUBCASE("empty replacement yields no waypoints") {
    World two = world_on(fix_a(), DooPolyline{{{2, 5}, {8, 5}}, {}});
    RoutingAction action{1, 2, {}, 0};
    PickPlaceCommand cmd = realize_action(two, action, Configuration{{0}});
    CHECK(cmd.waypoints.empty());
  }
}

TEST_CASE("apply_command replaces the grasped portion") {
  World w = world_on(fix_a(), DooPolyline{{{2, 5}, {8, 5}}, {}});

  SUBCASE("whole-line replacement with one waypoint") {
    PickPlaceCommand cmd{0.0, 6.0, {{2.5, 5.0}}, {}};
    World out = apply_command(w, cmd);
    CHECK(current_config(out).seq == std::vector<VertexId>{0});
  }

  SUBCASE("waypoint insertion at a parameter") {
    PickPlaceCommand cmd{3.0, 3.0, {{5.0, 6.0}}, {}};
    World out = apply_command(w, cmd);
    REQUIRE(out.doo.points.size() == 5);
    CHECK(out.doo.points[2].x == doctest::Approx(5.0));
    CHECK(out.doo.points[2].y == doctest::Approx(6.0));
  }

  SUBCASE("identity resettle keeps the configuration") {
    PickPlaceCommand cmd{1.0, 5.0, {{3.0, 5.0}, {7.0, 5.0}}, {}};
    World out = apply_command(w, cmd);
    CHECK(current_config(out) == current_config(w));
  }
}

TEST_CASE("run_episode") {
  SUBCASE("already at goal converges with zero steps") {
    World w = world_on(fix_a(), DooPolyline{{{2, 5}, {3, 5}}, {}});
    Episode ep = run_episode(w, Configuration{{0}}, 5);
    CHECK(ep.outcome == Episode::Outcome::Converged);
    CHECK(ep.steps.empty());
  }

  SUBCASE("FIX-B substitution converges in one action") {
    World w = world_on(fix_b(), DooPolyline{{{0.4, 0.5}, {1.6, 0.5}}, {}});
    CHECK(current_config(w).seq == std::vector<VertexId>{0, 1});
    Episode ep = run_episode(w, Configuration{{2, 3}}, 5);
    CHECK(ep.outcome == Episode::Outcome::Converged);
    CHECK(ep.steps.size() == 1);
    CHECK(bidirectional_equal(ep.steps.back().post_configuration,
                              Configuration{{2, 3}}));
  }

  SUBCASE("max_actions below one is rejected") {
    World w = world_on(fix_a(), DooPolyline{{{2, 5}, {3, 5}}, {}});
    CHECK_THROWS_AS(run_episode(w, Configuration{{0}}, 0), Error);
  }

  SUBCASE("tunnel goal is reachable") {
    World w = world_on(fix_b(), DooPolyline{{{0.4, 0.5}, {1.6, 0.5}}, {}});
    Episode ep = run_episode(w, Configuration{{0, 4, 5, 3}}, 8);
    CHECK(ep.outcome == Episode::Outcome::Converged);
    CHECK(bidirectional_equal(ep.steps.back().post_configuration,
                              Configuration{{0, 4, 5, 3}}));
  }
}

TEST_CASE("random_polyline determinism, validity, and arc length") {
  auto board = make_board(bundled_board());
  World w{board.layout, board.regions, board.graph, DooPolyline{}};

  DooPolyline p1 = random_polyline(w, 0.3, 0.5, 1);
  DooPolyline p2 = random_polyline(w, 0.3, 0.5, 1);
  REQUIRE(p1.points.size() == p2.points.size());
  for (size_t i = 0; i < p1.points.size(); ++i) {
    CHECK(p1.points[i].x == p2.points[i].x);
    CHECK(p1.points[i].y == p2.points[i].y);
  }

  for (uint64_t seed = 0; seed < 200; ++seed) {
    DooPolyline doo = random_polyline(w, 0.3, 0.5, seed);
    double arc = doo.arc_length();
    CHECK(arc >= 0.27);
    CHECK(arc <= 0.55);
    Configuration c = encode(doo, board.graph, board.regions, board.layout);
    CHECK_FALSE(validate(c, board.graph).has_value());
  }
}

TEST_CASE("benchmark determinism and closed-loop soundness") {
  Layout layout = bundled_board();
  BenchmarkStats s1 = run_benchmark(layout, 40, 42, 15, 0.3, 0.5, 1);
  BenchmarkStats s2 = run_benchmark(layout, 40, 42, 15, 0.3, 0.5, 4);
  CHECK(s1.per_trial_actions == s2.per_trial_actions);
  CHECK(s1.per_trial_success == s2.per_trial_success);
  CHECK(s1.success_rate == s2.success_rate);
  CHECK(s1.excluded == 0);
}

TEST_CASE("episode monotonicity and symbolic/geometric agreement") {
  auto board = make_board(bundled_board());
  for (uint64_t seed = 100; seed < 130; ++seed) {
    World w{board.layout, board.regions, board.graph,
            random_polyline({board.layout, board.regions, board.graph,
                             DooPolyline{}},
                            0.3, 0.5, seed)};
    DooPolyline goal_doo = random_polyline(w, 0.3, 0.5, seed + 1000);
    Configuration goal =
        simplify(encode(goal_doo, board.graph, board.regions, board.layout));

    Configuration current = current_config(w);
    int d = orient_goal(current, goal).distance;
    for (int step = 0; step < 15; ++step) {
      PlanOutcome outcome = next_action(current, goal, board.graph);
      if (std::holds_alternative<Done>(outcome)) break;
      const auto& next = std::get<NextStep>(outcome);
      Configuration projected = project(current, next.action);
      PickPlaceCommand cmd = realize_action(w, next.action, next.oriented_goal);
      w = apply_command(w, cmd);
      Configuration re_encoded = current_config(w);
      // The geometric world must land exactly on the symbolic projection.
      CHECK(re_encoded == simplify(projected));
      int d_next = orient_goal(re_encoded, goal).distance;
      CHECK(d_next < d);
      d = d_next;
      current = re_encoded;
    }
    CHECK(bidirectional_equal(current, goal));
  }
}
