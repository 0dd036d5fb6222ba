#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "byzgather/geom.hpp"

namespace testing_support {

using byzgather::Circle;
using byzgather::Point2;

inline std::vector<Point2> random_points(std::mt19937_64& rng, std::size_t n, double hi = 100.0) {
  std::uniform_real_distribution<double> u(0.0, hi);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

// Circumcircle of three points; radius is infinite for collinear input.
inline Circle circumcircle(Point2 a, Point2 b, Point2 c) {
  const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (std::abs(d) < 1e-14) return {{0, 0}, INFINITY};
  const double a2 = byzgather::dot(a, a), b2 = byzgather::dot(b, b), c2 = byzgather::dot(c, c);
  const Point2 o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                 (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
  return {o, byzgather::dist(o, a)};
}

// Smallest circle through 1-3 input points that covers everything: O(n^4).
inline Circle brute_mec(const std::vector<Point2>& pts) {
  auto covers = [&](const Circle& c) {
    for (Point2 p : pts)
      if (byzgather::dist(p, c.center) > c.radius * (1 + 1e-12) + 1e-9) return false;
    return true;
  };
  Circle best{pts[0], INFINITY};
  if (pts.size() == 1) return {pts[0], 0.0};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Circle c{byzgather::midpoint(pts[i], pts[j]), 0.5 * byzgather::dist(pts[i], pts[j])};
      if (c.radius < best.radius && covers(c)) best = c;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const Circle t = circumcircle(pts[i], pts[j], pts[k]);
        if (t.radius < best.radius && covers(t)) best = t;
      }
    }
  if (!std::isfinite(best.radius)) best = {pts[0], 0.0};
  return best;
}

}  // namespace testing_support
