// Planners for a single byzantine robot: the general single-point strategy,
// its optimal meeting point, and the three-robot closed form.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "byzgather/error.hpp"
#include "byzgather/planners.hpp"

namespace byzgather {

namespace {

std::vector<Point2> without(const std::vector<Point2>& pts, std::size_t omitted) {
  std::vector<Point2> out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != omitted) out.push_back(pts[i]);
  return out;
}

template <class F>
double golden_section_min(F&& f, double& arg) {
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  arg = 0.0;
  double best = f(0.0);
  for (double t : {1.0, 0.5 * (lo + hi), x1, x2}) {
    if (const double v = f(t); v < best) {
      best = v;
      arg = t;
    }
  }
  return best;
}

Trajectory straight_then_wait(Point2 from, Point2 to, double wait_until) {
  Trajectory tr;
  tr.waypoints.push_back({0.0, from});
  const double d = dist(from, to);
  if (d > 0.0) tr.waypoints.push_back({d, to});
  if (wait_until > d) tr.waypoints.push_back({wait_until, to});
  return tr;
}

}  // namespace

SubsetRadiusOrder subset_radius_order(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n < 3) throw Error(ErrorCode::TooSmall, "subset radius order needs three robots");
  SubsetRadiusOrder order;
  for (std::size_t i = 0; i < n; ++i)
    order.push_back({i, min_enclosing_circle(without(instance.robots(), i)).radius});
  std::sort(order.begin(), order.end(), [](const SubsetRadius& l, const SubsetRadius& r) {
    return l.radius < r.radius || (l.radius == r.radius && l.omitted < r.omitted);
  });
  // Re-sort runs of near-equal radii by index.
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && order[hi].radius - order[lo].radius <= kEpsGeo) ++hi;
    std::sort(order.begin() + lo, order.begin() + hi,
              [](const SubsetRadius& l, const SubsetRadius& r) { return l.omitted < r.omitted; });
    lo = hi;
  }
  return order;
}

double single_point_objective(std::span<const Point2> s0, Point2 omitted, double r0, double r1, Point2 d) {
  double far = 0.0;
  for (Point2 p : s0) far = std::max(far, dist(p, d));
  const double group = r0 > 0.0 ? far / r0 : (far <= kEpsGeo ? 0.0 : std::numeric_limits<double>::infinity());
  return std::max(group, (far + dist(omitted, d)) / (2.0 * r1));
}

MeetingPoint opt_point_f1(const Instance& instance) {
  const SubsetRadiusOrder order = subset_radius_order(instance);
  const std::size_t omitted = order[0].omitted;
  const double r0 = order[0].radius;
  const double r1 = order[1].radius;
  const std::vector<Point2> s0 = without(instance.robots(), omitted);
  const Point2 lone = instance.robots()[omitted];

  if (r1 <= kEpsGeo) return {s0[0], 1.0, omitted, std::nullopt};
  if (r0 <= kEpsGeo) return {s0[0], single_point_objective(s0, lone, 0.0, r1, s0[0]), omitted, std::nullopt};

  const Point2 center0 = min_enclosing_circle(s0).center;
  MeetingPoint best{center0, single_point_objective(s0, lone, r0, r1, center0), omitted, std::nullopt};

  // Beyond this radius the group term alone exceeds the value at Center[S_0].
  const double r_all = min_enclosing_circle(instance.robots()).radius;
  const double clamp = r0 * best.predicted_cr + r_all;

  const std::vector<FvdEdge> edges = furthest_voronoi(s0, clamp);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const LineSeg& seg = edges[k].seg;
    double arg = 0.0;
    const double value = golden_section_min(
        [&](double t) { return single_point_objective(s0, lone, r0, r1, seg.at(t)); }, arg);
    if (value < best.predicted_cr) best = {seg.at(arg), value, omitted, k};
  }
  return best;
}

TriangleInstance TriangleInstance::from_points(Point2 p, Point2 q, Point2 r) {
  const Point2 v[3] = {p, q, r};
  // B, C: closest pair; A: the remaining vertex.
  std::size_t bi = 0, ci = 1;
  double shortest = dist(v[0], v[1]);
  if (const double d = dist(v[0], v[2]); d < shortest) { shortest = d; bi = 0; ci = 2; }
  if (const double d = dist(v[1], v[2]); d < shortest) { shortest = d; bi = 1; ci = 2; }
  const std::size_t ai = 3 - bi - ci;

  TriangleInstance t;
  t.A = v[ai];
  t.B = v[bi];
  t.C = v[ci];
  if (dist(t.A, t.B) < dist(t.A, t.C)) std::swap(t.B, t.C);
  t.a = dist(t.B, t.C);
  t.b = dist(t.A, t.C);
  t.c = dist(t.A, t.B);

  // Heron in Kahan's ordering (x >= y >= z) for thin triangles.
  const double x = t.c, y = t.b, z = t.a;
  const double prod = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  t.area = 0.25 * std::sqrt(std::max(0.0, prod));
  if (t.a <= kEpsGeo || t.area <= 1e-12 * t.c * t.c)
    throw Error(ErrorCode::Degenerate, "triangle is collinear or has coincident vertices");

  auto angle = [](Point2 at, Point2 u, Point2 w) {
    return std::atan2(std::abs(cross(u - at, w - at)), dot(u - at, w - at));
  };
  t.beta = angle(t.B, t.A, t.C);
  t.gamma = angle(t.C, t.B, t.A);
  return t;
}

TriangleOptimum tri_opt_point(const TriangleInstance& tri) {
  const double a = tri.a, b = tri.b, c = tri.c;
  TriangleOptimum out;
  out.on_long_side = std::tan(tri.beta) <= std::sin(tri.gamma);
  if (out.on_long_side) {
    out.tan_phi = std::tan(tri.beta);
    out.predicted_cr = c / b;
  } else {
    const double num = 2.0 * std::sqrt(std::max(0.0, c * c - (b - a) * (b - a)));
    const double den = std::sqrt(std::max(0.0, (3.0 * b - a) * (3.0 * b - a) - c * c)) +
                       std::sqrt(std::max(0.0, (b + a) * (b + a) - c * c));
    out.tan_phi = num / den;
    out.predicted_cr = std::sqrt(1.0 + out.tan_phi * out.tan_phi);
  }
  // D sits (a/2) tan(phi) from the midpoint of BC along the normal towards A.
  Point2 normal = perp(tri.C - tri.B);
  if (dot(normal, tri.A - tri.B) < 0.0) normal = -1.0 * normal;
  out.d = midpoint(tri.B, tri.C) + (0.5 * out.tan_phi) * normal;
  return out;
}

Schedule plan_single_point(const Instance& instance, Point2 d) {
  const std::size_t n = instance.size();
  if (n < 3) throw Error(ErrorCode::TooSmall, "single-point strategy needs three robots");
  const auto& robots = instance.robots();

  std::vector<double> reach(n);
  for (std::size_t i = 0; i < n; ++i) reach[i] = dist(robots[i], d);
  std::vector<std::size_t> by_reach(n);
  std::iota(by_reach.begin(), by_reach.end(), std::size_t{0});
  std::stable_sort(by_reach.begin(), by_reach.end(),
                   [&](std::size_t l, std::size_t r) { return reach[l] < reach[r]; });
  const double first_group = reach[by_reach[n - 2]];
  const std::size_t laggard = by_reach[n - 1];

  Schedule s;
  s.algorithm = "single-point";
  s.meta.meeting_points.push_back(d);

  if (reach[laggard] - first_group <= kEpsGeo) {
    const double all_in = reach[laggard];
    for (std::size_t i = 0; i < n; ++i) s.trajectories.push_back(straight_then_wait(robots[i], d, all_in));
    return s;
  }

  const Point2 lag_pos = robots[laggard] + (first_group / reach[laggard]) * (d - robots[laggard]);
  const Point2 second = midpoint(d, lag_pos);
  const double closing = dist(d, second);
  const double end = first_group + closing;
  s.meta.meeting_points.push_back(second);

  for (std::size_t i = 0; i < n; ++i) {
    Trajectory tr;
    if (i == laggard) {
      tr.waypoints = {{0.0, robots[i]}, {first_group, lag_pos}, {end, second}};
    } else {
      tr = straight_then_wait(robots[i], d, first_group);
      tr.waypoints.push_back({end, second});
    }
    s.trajectories.push_back(std::move(tr));
  }
  return s;
}

Schedule plan_opt_f1(const Instance& instance) {
  if (instance.budget() != 1) throw Error(ErrorCode::WrongBudget, "opt-f1 requires F = 1");
  const MeetingPoint mp = opt_point_f1(instance);
  Schedule s = plan_single_point(instance, mp.d);
  s.algorithm = "opt-f1";
  s.meta.predicted_cr = mp.predicted_cr;
  return s;
}

Schedule plan_tri(const Instance& instance) {
  if (instance.size() != 3) throw Error(ErrorCode::BadParams, "tri requires exactly three robots");
  if (instance.budget() != 1) throw Error(ErrorCode::WrongBudget, "tri requires F = 1");
  const auto& r = instance.robots();
  const TriangleOptimum opt = tri_opt_point(TriangleInstance::from_points(r[0], r[1], r[2]));
  Schedule s = plan_single_point(instance, opt.d);
  s.algorithm = "tri";
  s.meta.predicted_cr = opt.predicted_cr;
  return s;
}

}  // namespace byzgather
