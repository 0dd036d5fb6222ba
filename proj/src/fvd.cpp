// Furthest-point Voronoi diagram by half-plane clipping of pairwise
// bisectors. Quadratic number of candidate edges, each clipped against every
// other site, which is plenty for the instance sizes planned here.

#include <algorithm>
#include <limits>

#include "byzgather/error.hpp"
#include "byzgather/geom.hpp"

namespace byzgather {

namespace {

struct UniqueSites {
  std::vector<Point2> pos;
  std::vector<std::size_t> original;
};

UniqueSites collapse_duplicates(std::span<const Point2> points) {
  UniqueSites out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool seen = std::any_of(out.pos.begin(), out.pos.end(),
                                  [&](Point2 q) { return dist(q, points[i]) <= kEpsGeo; });
    if (!seen) {
      out.pos.push_back(points[i]);
      out.original.push_back(i);
    }
  }
  return out;
}

}  // namespace

std::vector<FvdEdge> furthest_voronoi(std::span<const Point2> points, double clamp_radius) {
  if (!(clamp_radius > 0.0)) throw Error(ErrorCode::BadParams, "clamp radius must be positive");
  const UniqueSites sites = collapse_duplicates(points);
  if (sites.pos.size() < 2) throw Error(ErrorCode::Degenerate, "furthest-point diagram needs two distinct sites");

  const Point2 center = min_enclosing_circle(sites.pos).center;
  const std::size_t m = sites.pos.size();
  std::vector<FvdEdge> edges;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Point2 pi = sites.pos[i];
      const Point2 pj = sites.pos[j];
      const Point2 mid = midpoint(pi, pj);
      const Point2 dir = (1.0 / dist(pi, pj)) * perp(pj - pi);

      // Line against clamp disk.
      const Point2 rel = mid - center;
      const double half_b = dot(rel, dir);
      const double disc = half_b * half_b - (dot(rel, rel) - clamp_radius * clamp_radius);
      if (disc < 0.0) continue;
      double lo = -half_b - std::sqrt(disc);
      double hi = -half_b + std::sqrt(disc);

      // Points on the bisector are equidistant from i and j; they must also
      // be at least as far from i as from every other site k.
      bool empty = false;
      for (std::size_t k = 0; k < m && !empty; ++k) {
        if (k == i || k == j) continue;
        const Point2 pk = sites.pos[k];
        const Point2 n = (1.0 / dist(pi, pk)) * (pk - pi);
        const Point2 mid_ik = midpoint(pi, pk);
        const double s0 = dot(mid - mid_ik, n);
        const double s1 = dot(dir, n);
        if (std::abs(s1) < 1e-15) {
          if (s0 < -kEpsGeo) empty = true;
          continue;
        }
        const double t = -s0 / s1;
        if (s1 > 0.0)
          lo = std::max(lo, t);
        else
          hi = std::min(hi, t);
        if (hi - lo <= kEpsGeo) empty = true;
      }
      if (empty || hi - lo <= kEpsGeo) continue;
      edges.push_back({sites.original[i], sites.original[j], {mid + lo * dir, mid + hi * dir}});
    }
  }
  return edges;
}

}  // namespace byzgather
