#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dooroute;
using namespace dooroute::testing;

TEST_CASE("encode on FIX-A") {
  auto a = make_board(fix_a());
  DooPolyline single{{{2, 5}, {3, 5}}, {}};
  CHECK(encode(single, a.graph, a.regions, a.layout).seq ==
        std::vector<VertexId>{0});

  DooPolyline crossing{{{2, 5}, {8, 5}}, {}};
  CHECK(encode(crossing, a.graph, a.regions, a.layout).seq ==
        std::vector<VertexId>{0, 1});

  DooPolyline from_outside{{{-1, 5}, {8, 5}}, {}};
  CHECK(encode(from_outside, a.graph, a.regions, a.layout).seq ==
        std::vector<VertexId>{-1, 0, 1});
}

TEST_CASE("encode maps tunnel tags to entrance vertices") {
  auto b = make_board(fix_b());
  DooPolyline through{{{0.5, 0.5}, {1.5, 1.5}}, {{0, 0}}};
  CHECK(encode(through, b.graph, b.regions, b.layout).seq ==
        std::vector<VertexId>{4, 5});

  DooPolyline reversed{{{1.5, 1.5}, {0.5, 0.5}}, {{0, 0}}};
  CHECK(encode(reversed, b.graph, b.regions, b.layout).seq ==
        std::vector<VertexId>{5, 4});

  DooPolyline bad_tag{{{0.2, 0.2}, {1.5, 1.5}}, {{0, 0}}};
  CHECK_THROWS_WITH_AS(encode(bad_tag, b.graph, b.regions, b.layout),
                       doctest::Contains("BadTunnelTag"), Error);
}

TEST_CASE("encode rejects degenerate polylines") {
  auto a = make_board(fix_a());
  CHECK_THROWS_WITH_AS(
      encode(DooPolyline{{{1, 1}}, {}}, a.graph, a.regions, a.layout),
      doctest::Contains("EmptyPolyline"), Error);
}

TEST_CASE("simplify removes contiguous touch palindromes") {
  CHECK(simplify(Configuration{{0, 1, 0}}).seq == std::vector<VertexId>{0});
  CHECK(simplify(Configuration{{0, 1, 2, 1, 0}}).seq ==
        std::vector<VertexId>{0});
  // No contiguous (a, b, a) triple: untouched.
  Configuration board_example{{-1, 1, 27, 28, 11, 4, 1, 6, 4, 15, 6, 9, -1}};
  CHECK(simplify(board_example) == board_example);
}

TEST_CASE("validate returns the first offending index") {
  auto a = make_board(fix_a());
  auto b = make_board(fix_b());
  CHECK_FALSE(validate(Configuration{{0, 1}}, a.graph).has_value());
  CHECK(validate(Configuration{{0, 3}}, b.graph) == 0);
  CHECK(validate(Configuration{{}}, a.graph) == 0);
  CHECK(validate(Configuration{{0, 1, 1}}, a.graph) == 1);
  CHECK(validate(Configuration{{0, 42}}, a.graph) == 1);
}

TEST_CASE("reverse") {
  CHECK(reverse(Configuration{{0, 1}}).seq == std::vector<VertexId>{1, 0});
  CHECK(reverse(Configuration{{0}}).seq == std::vector<VertexId>{0});
  CHECK(reverse(Configuration{{-1, 0, 1, -1}}).seq ==
        std::vector<VertexId>{-1, 1, 0, -1});
}

TEST_CASE("bidirectional_equal") {
  CHECK(bidirectional_equal(Configuration{{0, 1}}, Configuration{{1, 0}}));
  CHECK(bidirectional_equal(Configuration{{0, 1}}, Configuration{{0, 1}}));
  CHECK_FALSE(
      bidirectional_equal(Configuration{{0, 1}}, Configuration{{0, 2}}));
}

TEST_CASE("encoder validity over random polylines") {
  auto board = make_board(bundled_board());
  World world{board.layout, board.regions, board.graph, DooPolyline{}};
  for (uint64_t seed = 0; seed < 300; ++seed) {
    DooPolyline doo = random_polyline(world, 0.3, 0.5, seed);
    Configuration c = encode(doo, board.graph, board.regions, board.layout);
    CHECK_FALSE(validate(c, board.graph).has_value());
  }
}

TEST_CASE("sampling stability away from region boundaries") {
  auto board = make_board(bundled_board());
  World world{board.layout, board.regions, board.graph, DooPolyline{}};
  for (uint64_t seed = 0; seed < 20; ++seed) {
    // Jittered centroid walks keep samples far from cell edges.
    DooPolyline doo = random_polyline(world, 0.3, 0.5, seed);
    Configuration coarse = simplify(
        encode(doo, board.graph, board.regions, board.layout, kSampleStep));
    Configuration fine = simplify(encode(doo, board.graph, board.regions,
                                         board.layout, kSampleStep / 2));
    CHECK(coarse == fine);
  }
}

TEST_CASE("simplify is idempotent and endpoint-preserving") {
  std::mt19937_64 rng(11);
  auto board = make_board(fix_b());
  for (int i = 0; i < 500; ++i) {
    Configuration c = random_walk_config(board.graph, 1 + i % 10, rng);
    Configuration s = simplify(c);
    CHECK(simplify(s) == s);
    CHECK(s.seq.front() == c.seq.front());
    CHECK(s.seq.back() == c.seq.back());
    CHECK(s.seq.size() <= c.seq.size());
    CHECK_FALSE(validate(s, board.graph).has_value());
  }
}

TEST_CASE("simplify commutes with reverse on all short FIX-B sequences") {
  auto board = make_board(fix_b());
  // Enumerate every valid sequence of length <= 6.
  std::vector<VertexId> walk;
  int checked = 0;
  std::function<void()> visit = [&]() {
    Configuration c{walk};
    CHECK(simplify(reverse(c)) == reverse(simplify(c)));
    CHECK(reverse(reverse(c)) == c);
    ++checked;
    if (walk.size() == 6) return;
    for (VertexId next : board.graph.neighbors(walk.back())) {
      walk.push_back(next);
      visit();
      walk.pop_back();
    }
  };
  for (VertexId v = -1; v < board.graph.vertex_count() - 1; ++v) {
    walk = {v};
    visit();
  }
  CHECK(checked > 1000);
}
