#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "byzgather/error.hpp"
#include "byzgather/geom.hpp"
#include "support.hpp"

using namespace byzgather;
using testing_support::brute_mec;
using testing_support::random_points;

namespace {

// Closed-side depth of K over one direction.
int min_side_count(const std::vector<Point2>& pts, Point2 k, Point2 normal) {
  int pos = 0, neg = 0;
  for (Point2 p : pts) {
    const double s = dot(normal, p - k);
    if (s >= -1e-9) ++pos;
    if (s <= 1e-9) ++neg;
  }
  return std::min(pos, neg);
}

}  // namespace

TEST_CASE("mec: basic examples") {
  const std::vector<Point2> pair{{0, 0}, {2, 0}};
  Circle c = min_enclosing_circle(pair);
  CHECK(c.center.x == doctest::Approx(1.0));
  CHECK(c.center.y == doctest::Approx(0.0));
  CHECK(c.radius == doctest::Approx(1.0));

  const std::vector<Point2> one{{5, 5}};
  c = min_enclosing_circle(one);
  CHECK(c.center == Point2{5, 5});
  CHECK(c.radius == 0.0);

  // Brute force over pairs and triples gives the circumcircle (1, 0.75), 1.25.
  const std::vector<Point2> tri{{0, 0}, {2, 0}, {1, 2}};
  const Circle oracle = brute_mec(tri);
  c = min_enclosing_circle(tri);
  CHECK(oracle.radius == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(c.radius == doctest::Approx(oracle.radius).epsilon(1e-12));
  CHECK(c.center.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.center.y == doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_AS(min_enclosing_circle(std::vector<Point2>{}), Error);
}

TEST_CASE("mec: matches brute force and is minimal on random sets") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 10);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto pts = random_points(rng, static_cast<std::size_t>(size(rng)));
    const Circle c = min_enclosing_circle(pts);
    const Circle oracle = brute_mec(pts);
    for (Point2 p : pts) REQUIRE(c.contains(p, 1e-9));
    REQUIRE(c.radius <= oracle.radius + 1e-9);
    REQUIRE(c.radius >= oracle.radius - 1e-9);
  }
}

TEST_CASE("mec: deterministic across calls") {
  std::mt19937_64 rng(3);
  const auto pts = random_points(rng, 30);
  const Circle a = min_enclosing_circle(pts);
  const Circle b = min_enclosing_circle(pts);
  CHECK(a.center == b.center);
  CHECK(a.radius == b.radius);
}

TEST_CASE("support set: examples") {
  const std::vector<Point2> pair{{0, 0}, {2, 0}};
  CHECK(support_set(pair, min_enclosing_circle(pair)) == std::vector<std::size_t>{0, 1});
  const std::vector<Point2> interior{{0, 0}, {2, 0}, {1, 0.5}};
  CHECK(support_set(interior, min_enclosing_circle(interior)) == std::vector<std::size_t>{0, 1});
  const std::vector<Point2> tri{{0, 0}, {2, 0}, {1, 2}};
  CHECK(support_set(tri, min_enclosing_circle(tri)) == std::vector<std::size_t>{0, 1, 2});
  const std::vector<Point2> same{{1, 1}, {1, 1}};
  CHECK(support_set(same, min_enclosing_circle(same)).size() == 1);
}

TEST_CASE("support set: square corners reduce to a diametral pair") {
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto sup = support_set(sq, min_enclosing_circle(sq));
  REQUIRE(sup.size() == 2);
  CHECK(dist(sq[sup[0]], sq[sup[1]]) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("support set: dropping non-support points keeps the MEC") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto pts = random_points(rng, 2 + trial % 12);
    const Circle c = min_enclosing_circle(pts);
    const auto sup = support_set(pts, c);
    REQUIRE(sup.size() >= 2);
    REQUIRE(sup.size() <= 3);
    std::vector<Point2> kept;
    for (auto i : sup) kept.push_back(pts[i]);
    const Circle k = min_enclosing_circle(kept);
    REQUIRE(k.radius == doctest::Approx(c.radius).epsilon(1e-9));
    REQUIRE(dist(k.center, c.center) <= 1e-7);
  }
}

TEST_CASE("closest distinct pair: examples") {
  ClosestPair cp = closest_distinct_pair(std::vector<Point2>{{0, 0}, {1, 0}, {3, 0}});
  CHECK(cp.i == 0);
  CHECK(cp.j == 1);
  CHECK(cp.distance == 1.0);
  cp = closest_distinct_pair(std::vector<Point2>{{0, 0}, {0, 0}, {5, 0}});
  CHECK(cp.i == 0);
  CHECK(cp.j == 2);
  CHECK(cp.distance == 5.0);
  cp = closest_distinct_pair(std::vector<Point2>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(cp.i == 0);
  CHECK(cp.j == 1);
  try {
    closest_distinct_pair(std::vector<Point2>{{2, 2}, {2, 2}});
    FAIL("expected AllCoincident");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllCoincident);
  }
}

TEST_CASE("fvd: two sites give the clamped bisector") {
  const std::vector<Point2> pts{{0, 0}, {2, 0}};
  const auto edges = furthest_voronoi(pts, 10.0);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].seg.a.x == doctest::Approx(1.0));
  CHECK(edges[0].seg.b.x == doctest::Approx(1.0));
  CHECK(edges[0].seg.length() == doctest::Approx(20.0));
}

TEST_CASE("fvd: triangle has three edges meeting at the circumcenter") {
  const std::vector<Point2> pts{{0, 0}, {2, 0}, {1, 2}};
  const auto edges = furthest_voronoi(pts, 10.0);
  REQUIRE(edges.size() == 3);
  for (const auto& e : edges) {
    const bool a_end = dist(e.seg.a, {1, 0.75}) < 1e-9;
    const bool b_end = dist(e.seg.b, {1, 0.75}) < 1e-9;
    CHECK((a_end || b_end));
    // Both sites are furthest along the edge.
    for (double t : {0.0, 0.3, 0.7, 1.0}) {
      const Point2 q = e.seg.at(t);
      double far = 0.0;
      for (Point2 p : pts) far = std::max(far, dist(p, q));
      CHECK(dist(pts[e.site_a], q) == doctest::Approx(far).epsilon(1e-12));
      CHECK(dist(pts[e.site_b], q) == doctest::Approx(far).epsilon(1e-12));
    }
  }
}

TEST_CASE("fvd: collinear middle point owns no cell") {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}};
  const auto edges = furthest_voronoi(pts, 10.0);
  REQUIRE(edges.size() == 1);
  CHECK(std::set<std::size_t>{edges[0].site_a, edges[0].site_b} == std::set<std::size_t>{0, 2});
  // Dense grid classification never names the middle point.
  for (int i = -20; i <= 20; ++i)
    for (int j = -20; j <= 20; ++j) CHECK(furthest_site(pts, {0.5 * i + 1.0, 0.5 * j}) != 1);
}

TEST_CASE("fvd: errors") {
  CHECK_THROWS_AS(furthest_voronoi(std::vector<Point2>{{1, 1}, {1, 1}}, 1.0), Error);
  CHECK_THROWS_AS(furthest_voronoi(std::vector<Point2>{{0, 0}, {1, 1}}, 0.0), Error);
}

TEST_CASE("fvd: edges match brute-force furthest-site classification") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(rng, 3 + trial % 8);
    const double clamp = 150.0;
    const auto edges = furthest_voronoi(pts, clamp);
    const Point2 center = min_enclosing_circle(pts).center;

    for (const auto& e : edges) {
      REQUIRE(dist(e.seg.a, center) <= clamp + 1e-6);
      REQUIRE(dist(e.seg.b, center) <= clamp + 1e-6);
      for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const Point2 q = e.seg.at(t);
        double far = 0.0;
        for (Point2 p : pts) far = std::max(far, dist(p, q));
        REQUIRE(std::abs(dist(pts[e.site_a], q) - far) <= 1e-9 * std::max(1.0, far));
        REQUIRE(std::abs(dist(pts[e.site_b], q) - far) <= 1e-9 * std::max(1.0, far));
      }
    }

    // Sites owning a cell in the disk are exactly the sites that are furthest
    // from some sample point, and those cells are separated by the edges.
    std::set<std::size_t> from_edges, from_samples;
    for (const auto& e : edges) {
      from_edges.insert(e.site_a);
      from_edges.insert(e.site_b);
    }
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI), rad(0.0, 1.0);
    for (int s = 0; s < 1000; ++s) {
      const double r = clamp * std::sqrt(rad(rng)), th = ang(rng);
      const Point2 q = center + r * Point2{std::cos(th), std::sin(th)};
      from_samples.insert(furthest_site(pts, q));
    }
    for (auto i : from_samples) REQUIRE(from_edges.count(i) == 1);
  }
}

TEST_CASE("centerpoint: examples") {
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  Point2 k = centerpoint(sq);
  CHECK(k.x == doctest::Approx(0.5));
  CHECK(k.y == doctest::Approx(0.5));

  const std::vector<Point2> line{{0, 0}, {1, 0}, {2, 0}};
  k = centerpoint(line);
  CHECK(k.x == doctest::Approx(1.0));
  CHECK(k.y == doctest::Approx(0.0));
  // Every line through a pair of points leaves >= 1 point on each closed side.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(min_side_count(line, k, perp(line[j] - line[i])) >= 1);

  const std::vector<Point2> tri{{0, 0}, {3, 0}, {0, 3}};
  k = centerpoint(tri);
  CHECK(k.x == doctest::Approx(1.0));
  CHECK(k.y == doctest::Approx(1.0));
  CHECK_THROWS_AS(centerpoint(std::vector<Point2>{}), Error);
}

TEST_CASE("centerpoint: depth on random sets") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(0.0, M_PI);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 14;
    const auto pts = random_points(rng, n);
    const Point2 k = centerpoint(pts);
    const int need = static_cast<int>((n + 2) / 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) REQUIRE(min_side_count(pts, k, perp(pts[j] - pts[i])) >= need);
    for (Point2 p : pts)
      if (dist(p, k) > 1e-9) REQUIRE(min_side_count(pts, k, perp(p - k)) >= need);
    for (int s = 0; s < 200; ++s) {
      const double th = ang(rng);
      REQUIRE(min_side_count(pts, k, {std::cos(th), std::sin(th)}) >= need);
    }
  }
}

TEST_CASE("median lines: examples") {
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  MedianLines m = median_line_pair(sq);
  CHECK(m.crossing.x == doctest::Approx(0.5));
  CHECK(m.crossing.y == doctest::Approx(0.5));
  CHECK(m.first.a.x == doctest::Approx(0.5));
  CHECK(m.first.b.x == doctest::Approx(0.5));
  CHECK(m.second.a.y == doctest::Approx(0.5));

  m = median_line_pair(std::vector<Point2>{{0, 0}, {2, 0}, {1, 2}});
  CHECK(m.crossing.x == doctest::Approx(1.0));
  CHECK(m.crossing.y == doctest::Approx(0.0));

  m = median_line_pair(std::vector<Point2>{{3, 4}});
  CHECK(m.crossing == Point2{3, 4});
}

TEST_CASE("median lines: halving property") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 15;
    const auto pts = random_points(rng, n);
    const MedianLines m = median_line_pair(pts);
    const int need = static_cast<int>((n + 1) / 2);
    const Point2 d1 = m.first.b - m.first.a, d2 = m.second.b - m.second.a;
    REQUIRE(std::abs(dot(d1, d2)) <= 1e-9 * norm(d1) * norm(d2));
    REQUIRE(min_side_count(pts, m.crossing, perp(d1)) >= need);
    REQUIRE(min_side_count(pts, m.crossing, perp(d2)) >= need);
  }
}

TEST_CASE("polygon helpers") {
  const Polygon sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  CHECK(polygon_area(sq) == doctest::Approx(4.0));
  const Point2 c = polygon_centroid(sq);
  CHECK(c.x == doctest::Approx(1.0));
  CHECK(c.y == doctest::Approx(1.0));
  const Polygon half = clip_halfplane(sq, {1, 0}, 1.0);
  CHECK(polygon_area(half) == doctest::Approx(2.0));
  CHECK(clip_halfplane(sq, {1, 0}, 3.0).empty());
  const Polygon seg{{0, 0}, {4, 0}};
  CHECK(polygon_centroid(seg).x == doctest::Approx(2.0));
}
