#include <algorithm>
#include <stdexcept>

#include "byzgather/error.hpp"
#include "byzgather/geom.hpp"

namespace byzgather {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// All points on one line: the depth question is one-dimensional.
Point2 collinear_centerpoint(std::span<const Point2> points, Point2 origin, Point2 dir) {
  std::vector<double> t;
  t.reserve(points.size());
  for (Point2 p : points) t.push_back(dot(p - origin, dir));
  std::sort(t.begin(), t.end());
  const std::size_t k = ceil_div(points.size(), 3);
  const double lo = t[k - 1];
  const double hi = t[points.size() - k];
  return origin + (0.5 * (lo + hi)) * dir;
}

Polygon center_region(std::span<const Point2> points, double eps) {
  const std::size_t n = points.size();
  const std::size_t need = n - ceil_div(n, 3) + 1;

  double x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
  for (Point2 p : points) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  Polygon region{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};

  for (std::size_t i = 0; i < n && !region.empty(); ++i) {
    for (std::size_t j = i + 1; j < n && !region.empty(); ++j) {
      const double len = dist(points[i], points[j]);
      if (len <= kEpsGeo) continue;
      const Point2 nrm = (1.0 / len) * perp(points[j] - points[i]);
      const double off = dot(nrm, points[i]);
      std::size_t pos = 0, neg = 0;
      for (Point2 p : points) {
        const double s = dot(nrm, p) - off;
        if (s >= -eps) ++pos;
        if (s <= eps) ++neg;
      }
      if (pos >= need) region = clip_halfplane(region, nrm, off, eps);
      if (neg >= need) region = clip_halfplane(region, -1.0 * nrm, -off, eps);
    }
  }
  return region;
}

}  // namespace

Point2 centerpoint(std::span<const Point2> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "centerpoint of no points");

  std::size_t far_i = 0, far_j = 0;
  double diam = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (const double d = dist(points[i], points[j]); d > diam) {
        diam = d;
        far_i = i;
        far_j = j;
      }
  if (diam <= kEpsGeo) return points[0];

  const Point2 origin = points[far_i];
  const Point2 dir = (1.0 / diam) * (points[far_j] - origin);
  const bool collinear = std::all_of(points.begin(), points.end(), [&](Point2 p) {
    return std::abs(cross(dir, p - origin)) <= kEpsGeo;
  });
  if (collinear) return collinear_centerpoint(points, origin, dir);

  for (double eps : {kEpsGeo, 1e-6 * diam}) {
    const Polygon region = center_region(points, eps);
    if (!region.empty()) return polygon_centroid(region);
  }
  throw std::logic_error("center region came out empty");
}

MedianLines median_line_pair(std::span<const Point2> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "median lines of no points");

  std::vector<double> xs, ys;
  for (Point2 p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const bool x_flat = std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs[0]; });
  const Point2 k{median_of(xs), median_of(ys)};
  const Point2 vertical{0.0, 1.0};
  const Point2 horizontal{1.0, 0.0};
  if (!x_flat) return {{k, k + vertical}, {k, k + horizontal}, k};
  return {{k, k + horizontal}, {k, k + vertical}, k};
}

}  // namespace byzgather
