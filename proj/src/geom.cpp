#include "byzgather/geom.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "byzgather/error.hpp"

namespace byzgather {

namespace {

Circle diametral(Point2 a, Point2 b) { return {midpoint(a, b), 0.5 * dist(a, b)}; }

Circle circumscribed(Point2 a, Point2 b, Point2 c) {
  const Point2 ab = b - a;
  const Point2 ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  const double scale = norm(ab) * norm(ac);
  if (std::abs(d) <= 1e-14 * scale) {
    // Collinear: the circle on the farthest pair covers the third point.
    Circle best = diametral(a, b);
    for (const Circle& cand : {diametral(a, c), diametral(b, c)})
      if (cand.radius > best.radius) best = cand;
    return best;
  }
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  const Point2 offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  const Point2 center = a + offset;
  const double r = std::max({dist(center, a), dist(center, b), dist(center, c)});
  return {center, r};
}

}  // namespace

Circle min_enclosing_circle(std::span<const Point2> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "min_enclosing_circle of no points");

  std::vector<Point2> p(points.begin(), points.end());
  std::mt19937 rng(0x5eed);
  std::shuffle(p.begin(), p.end(), rng);

  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (c.contains(p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (c.contains(p[j])) continue;
      c = diametral(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (c.contains(p[k])) continue;
        c = circumscribed(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

std::vector<std::size_t> support_set(std::span<const Point2> points, const Circle& c) {
  if (points.empty()) return {};
  if (c.radius <= kEpsGeo) return {0};

  std::vector<std::size_t> boundary;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::abs(dist(points[i], c.center) - c.radius) <= kEpsGeo) boundary.push_back(i);
  if (boundary.size() <= 3) return boundary;

  const std::size_t m = boundary.size();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (dist(points[boundary[u]], points[boundary[v]]) >= 2.0 * c.radius - 2.0 * kEpsGeo)
        return {boundary[u], boundary[v]};

  auto same_side = [&](Point2 a, Point2 b, Point2 q) {
    return cross(b - a, q - a) >= -kEpsGeo * norm(b - a);
  };
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      for (std::size_t w = v + 1; w < m; ++w) {
        Point2 a = points[boundary[u]], b = points[boundary[v]], d = points[boundary[w]];
        if (cross(b - a, d - a) < 0) std::swap(b, d);
        if (same_side(a, b, c.center) && same_side(b, d, c.center) && same_side(d, a, c.center))
          return {boundary[u], boundary[v], boundary[w]};
      }
  return boundary;
}

ClosestPair closest_distinct_pair(std::span<const Point2> points) {
  bool found = false;
  ClosestPair best;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = dist(points[i], points[j]);
      if (d <= kEpsGeo) continue;
      if (!found || d < best.distance - kEpsGeo) {
        best = {i, j, d};
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorCode::AllCoincident, "no two distinct positions");
  return best;
}

std::size_t furthest_site(std::span<const Point2> points, Point2 q) {
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = dist(points[i], q);
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

Polygon clip_halfplane(const Polygon& poly, Point2 normal, double offset, double eps) {
  Polygon out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  if (n == 1) {
    if (dot(normal, poly[0]) - offset >= -eps) out.push_back(poly[0]);
    return out;
  }
  const double scale = norm(normal);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 cur = poly[i];
    const Point2 nxt = poly[(i + 1) % n];
    const double sc = (dot(normal, cur) - offset) / scale;
    const double sn = (dot(normal, nxt) - offset) / scale;
    const bool in_cur = sc >= -eps;
    const bool in_nxt = sn >= -eps;
    if (in_cur) out.push_back(cur);
    if (in_cur != in_nxt) {
      const double t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  // Drop consecutive duplicates produced by tolerant clipping.
  Polygon dedup;
  for (const Point2& p : out)
    if (dedup.empty() || dist(dedup.back(), p) > 1e-3 * eps) dedup.push_back(p);
  while (dedup.size() > 1 && dist(dedup.front(), dedup.back()) <= 1e-3 * eps) dedup.pop_back();
  return dedup;
}

double polygon_area(const Polygon& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    twice += cross(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * twice;
}

Point2 polygon_centroid(const Polygon& poly) {
  double extent = 0.0;
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = i + 1; j < poly.size(); ++j)
      if (const double d = dist(poly[i], poly[j]); d > extent) {
        extent = d;
        ia = i;
        ib = j;
      }

  // Shift to the first vertex so the shoelace sums stay well conditioned.
  const Point2 o = poly[0];
  double a2 = 0.0;
  Point2 acc{};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 p = poly[i] - o;
    const Point2 q = poly[(i + 1) % poly.size()] - o;
    const double w = cross(p, q);
    a2 += w;
    acc = acc + w * (p + q);
  }
  if (std::abs(a2) > 1e-12 * extent * extent && std::abs(a2) > 0.0)
    return o + (1.0 / (3.0 * a2)) * acc;
  return midpoint(poly[ia], poly[ib]);
}

}  // namespace byzgather
