#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dooroute;
using namespace dooroute::testing;

namespace {

Polygon unit_square() { return Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

}  // namespace

TEST_CASE("validate_layout accepts minimal and nested layouts") {
  Layout minimal;
  minimal.boundary = unit_square();
  CHECK_NOTHROW(validate_layout(minimal));

  Layout with_hole;
  with_hole.boundary = Polygon{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}};
  with_hole.holes.push_back(Polygon{{{1, 1}, {1, 3}, {3, 3}, {3, 1}}});
  auto validated = validate_layout(with_hole);
  CHECK(point_in_polygon({2, 2}, with_hole.holes[0]));
  CHECK(point_in_polygon({2, 2}, validated.boundary()));
}

TEST_CASE("validate_layout rejects a bowtie boundary") {
  Layout bad;
  bad.boundary = Polygon{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
  CHECK_THROWS_WITH_AS(validate_layout(bad),
                       doctest::Contains("NonSimplePolygon"), Error);
}

TEST_CASE("validate_layout rejects wrong orientations") {
  Layout cw;
  cw.boundary = unit_square();
  std::reverse(cw.boundary.vertices.begin(), cw.boundary.vertices.end());
  CHECK_THROWS_WITH_AS(validate_layout(cw),
                       doctest::Contains("WrongOrientation"), Error);
}

TEST_CASE("validate_layout rejects overlapping holes") {
  Layout bad;
  bad.boundary = Polygon{{{0, 0}, {10, 0}, {10, 10}, {0, 10}}};
  bad.holes.push_back(Polygon{{{1, 1}, {1, 4}, {4, 4}, {4, 1}}});
  bad.holes.push_back(Polygon{{{3, 3}, {3, 6}, {6, 6}, {6, 3}}});
  CHECK_THROWS_WITH_AS(validate_layout(bad),
                       doctest::Contains("OverlappingHoles"), Error);
}

TEST_CASE("is_convex") {
  CHECK(is_convex(unit_square()));
  CHECK(is_convex(Polygon{{{0, 0}, {1, 0}, {0.5, 0.866}}}));
  // L-shaped hexagon has one reflex vertex.
  CHECK_FALSE(is_convex(
      Polygon{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}));
  // Collinear vertices still count as convex.
  CHECK(is_convex(Polygon{{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}}}));
  CHECK_THROWS_AS(is_convex(Polygon{{{0, 0}, {1, 1}}}), Error);
}

TEST_CASE("polygon_area is signed") {
  CHECK(polygon_area(unit_square()) == doctest::Approx(1.0));
  Polygon cw = unit_square();
  std::reverse(cw.vertices.begin(), cw.vertices.end());
  CHECK(polygon_area(cw) == doctest::Approx(-1.0));
  CHECK(polygon_area(Polygon{{{0, 0}, {4, 0}, {0, 3}}}) ==
        doctest::Approx(6.0));
}

TEST_CASE("centroid") {
  Point2 c = centroid(unit_square());
  CHECK(c.x == doctest::Approx(0.5));
  CHECK(c.y == doctest::Approx(0.5));
  Point2 t = centroid(Polygon{{{0, 0}, {3, 0}, {0, 3}}});
  CHECK(t.x == doctest::Approx(1.0));
  CHECK(t.y == doctest::Approx(1.0));
  Point2 r = centroid(Polygon{{{0, 0}, {10, 0}, {10, 4}, {0, 4}}});
  CHECK(r.x == doctest::Approx(5.0));
  CHECK(r.y == doctest::Approx(2.0));
}

TEST_CASE("triangulate square and triangle") {
  auto tris = triangulate(unit_square(), {});
  CHECK(tris.size() == 2);
  double total = 0;
  for (const auto& t : tris) total += polygon_area(t);
  CHECK(total == doctest::Approx(1.0));

  Polygon tri{{{0, 0}, {4, 0}, {0, 3}}};
  auto single = triangulate(tri, {});
  REQUIRE(single.size() == 1);
  CHECK(polygon_area(single[0]) == doctest::Approx(6.0));
}

TEST_CASE("triangulate square with centered hole") {
  Polygon outer{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}};
  Polygon hole{{{1, 1}, {1, 3}, {3, 3}, {3, 1}}};
  auto tris = triangulate(outer, {hole});
  CHECK(tris.size() >= 8);
  double total = 0;
  for (const auto& t : tris) {
    CHECK(polygon_area(t) > 0);
    total += polygon_area(t);
  }
  CHECK(total == doctest::Approx(16.0 - 4.0));
}

TEST_CASE("merge_convex merges a split square and preserves identity") {
  Polygon t1{{{0, 0}, {1, 0}, {1, 1}}};
  Polygon t2{{{0, 0}, {1, 1}, {0, 1}}};
  auto merged = merge_convex({t1, t2});
  REQUIRE(merged.size() == 1);
  CHECK(polygon_area(merged[0].polygon) == doctest::Approx(1.0));
  CHECK(is_convex(merged[0].polygon));

  auto identity = merge_convex({t1});
  REQUIRE(identity.size() == 1);
  CHECK(polygon_area(identity[0].polygon) == doctest::Approx(0.5));
}

TEST_CASE("merge_convex on an L-shape stays convex and conserves area") {
  Polygon l{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
  auto regions = merge_convex(triangulate(l, {}));
  CHECK(regions.size() <= 3);
  double total = 0;
  for (const auto& r : regions) {
    CHECK(is_convex(r.polygon));
    total += polygon_area(r.polygon);
  }
  CHECK(total == doctest::Approx(3.0));
}

TEST_CASE("decompose adopts predecompositions with dense ids") {
  auto a = make_board(fix_a());
  REQUIRE(a.regions.size() == 2);
  CHECK(a.regions[0].id == 0);
  CHECK(a.regions[1].id == 1);
  CHECK(a.regions[0].centroid.x == doctest::Approx(2.5));
  CHECK(a.regions[1].centroid.x == doctest::Approx(7.5));

  auto b = make_board(fix_b());
  REQUIRE(b.regions.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(b.regions[i].id == i);

  Layout plain;
  plain.boundary = unit_square();
  auto regions = decompose(validate_layout(plain));
  REQUIRE(regions.size() == 1);
  CHECK(polygon_area(regions[0].polygon) == doctest::Approx(1.0));
}

TEST_CASE("decompose rejects a non-tiling predecomposition") {
  Layout bad = fix_a();
  bad.predecomposed->pop_back();
  CHECK_THROWS_WITH_AS(validate_layout(bad),
                       doctest::Contains("BadPredecomposition"), Error);
}

TEST_CASE("locate on FIX-A including ties and outside") {
  auto a = make_board(fix_a());
  CHECK(locate({2, 5}, a.regions, a.layout) == 0);
  CHECK(locate({12, 5}, a.regions, a.layout) == -1);
  // Shared side x = 5 resolves to the lowest region id.
  CHECK(locate({5, 5}, a.regions, a.layout) == 0);
}

TEST_CASE("shared_side on fixtures") {
  auto a = make_board(fix_a());
  auto seg = shared_side(a.regions[0], a.regions[1]);
  REQUIRE(seg.has_value());
  CHECK(seg->length() == doctest::Approx(10.0));
  CHECK(seg->a.x == doctest::Approx(5.0));
  CHECK(seg->b.x == doctest::Approx(5.0));

  auto b = make_board(fix_b());
  // Diagonal cells touch at a corner only.
  CHECK_FALSE(shared_side(b.regions[0], b.regions[3]).has_value());

  ConvexRegion far_a{0, Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}, {0.5, 0.5}};
  ConvexRegion far_b{1, Polygon{{{5, 5}, {6, 5}, {6, 6}, {5, 6}}}, {5.5, 5.5}};
  CHECK_FALSE(shared_side(far_a, far_b).has_value());
}

TEST_CASE("shared_side is symmetric") {
  auto board = make_board(bundled_board());
  for (size_t i = 0; i < board.regions.size(); ++i) {
    for (size_t j = i + 1; j < board.regions.size(); ++j) {
      auto ab = shared_side(board.regions[i], board.regions[j]);
      auto ba = shared_side(board.regions[j], board.regions[i]);
      CHECK(ab.has_value() == ba.has_value());
      if (ab && ba) CHECK(ab->length() == doctest::Approx(ba->length()));
    }
  }
}

TEST_CASE("tiling and convexity over layouts with holes") {
  Layout layout;
  layout.boundary = Polygon{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}};
  layout.holes.push_back(Polygon{{{1, 1}, {1, 3}, {3, 3}, {3, 1}}});
  auto validated = validate_layout(layout);
  auto regions = decompose(validated);
  double total = 0;
  for (const auto& r : regions) {
    CHECK(is_convex(r.polygon));
    total += polygon_area(r.polygon);
  }
  CHECK(total == doctest::Approx(12.0).epsilon(kAreaRelTol));
}

TEST_CASE("locate agrees with the exhaustive membership oracle") {
  auto board = make_board(bundled_board());
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-0.02, 0.40);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    Point2 p{coord(rng), coord(rng)};
    if (near_any_region_edge(p, board.regions, board.layout.get(), kEps)) {
      continue;
    }
    ++checked;
    CHECK(locate(p, board.regions, board.layout) ==
          locate_oracle(p, board.regions, board.layout.get()));
  }
  CHECK(checked > 9000);
}

TEST_CASE("centroid containment: locate(centroid(r)) == r.id") {
  for (const Layout& layout : {fix_a(), fix_b(), bundled_board()}) {
    auto board = make_board(layout);
    for (const auto& r : board.regions) {
      CHECK(locate(r.centroid, board.regions, board.layout) == r.id);
    }
  }
}
