#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace byzgather {

// Absolute tolerance on distances. Inputs are expected to have magnitude
// below ~1e6.
inline constexpr double kEpsGeo = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
constexpr Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
// Counter-clockwise quarter turn.
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Circle {
  Point2 center;
  double radius = 0.0;

  bool contains(Point2 p, double eps = kEpsGeo) const { return dist(center, p) <= radius + eps; }
};

// Directed segment a -> b. Also used to carry an infinite line through a in
// direction b - a.
struct LineSeg {
  Point2 a;
  Point2 b;

  Point2 at(double t) const { return a + t * (b - a); }
  double length() const { return dist(a, b); }
};

// One edge of the furthest-point Voronoi diagram: the part of the bisector of
// sites site_a and site_b on which both are the furthest input points.
struct FvdEdge {
  std::size_t site_a = 0;
  std::size_t site_b = 0;
  LineSeg seg;
};

struct ClosestPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;
};

struct MedianLines {
  LineSeg first;   // perpendicular to the projection axis
  LineSeg second;  // perpendicular to first
  Point2 crossing;
};

/// Smallest circle containing every point (randomized incremental
/// construction with a fixed shuffle seed, so repeated calls agree).
/// Throws Error(EmptySet) on empty input.
Circle min_enclosing_circle(std::span<const Point2> points);

/// Indices of the points on the boundary of `c`. When more than three points
/// are cocircular a minimal supporting subset (a diametral pair, or a triple
/// whose triangle holds the center) is returned instead.
std::vector<std::size_t> support_set(std::span<const Point2> points, const Circle& c);

/// Pair of indices (i < j) at minimal positive distance. Ties go to the
/// lexicographically smallest (i, j). Throws Error(AllCoincident).
ClosestPair closest_distinct_pair(std::span<const Point2> points);

/// Furthest-point Voronoi edges clamped to the disk of radius clamp_radius
/// about the MEC center of `points`. Site indices refer to `points`;
/// duplicates are collapsed onto their first occurrence.
/// Throws Error(Degenerate) for fewer than two distinct points and
/// Error(BadParams) for a non-positive clamp radius.
std::vector<FvdEdge> furthest_voronoi(std::span<const Point2> points, double clamp_radius);

/// Index of a furthest point from q (lowest index on ties).
std::size_t furthest_site(std::span<const Point2> points, Point2 q);

/// A centerpoint: each closed side of every line through it keeps at least
/// ceil(n/3) points. Returns the centroid of the exact center region.
/// Throws Error(EmptySet).
Point2 centerpoint(std::span<const Point2> points);

/// Two perpendicular median lines (x-median then y-median; axes swapped if all
/// x coincide) and their crossing point. Throws Error(EmptySet).
MedianLines median_line_pair(std::span<const Point2> points);

// Convex polygon helpers shared by the center region and the lower-bound
// certificate. Polygons are vertex lists in counter-clockwise order and may
// degenerate to a segment or a point.
using Polygon = std::vector<Point2>;

/// Keeps the part of `poly` where dot(normal, p) >= offset - eps.
Polygon clip_halfplane(const Polygon& poly, Point2 normal, double offset, double eps = kEpsGeo);
double polygon_area(const Polygon& poly);
/// Area centroid, or the midpoint of the extreme vertices when the polygon has
/// collapsed to a segment or point. `poly` must be non-empty.
Point2 polygon_centroid(const Polygon& poly);

}  // namespace byzgather
