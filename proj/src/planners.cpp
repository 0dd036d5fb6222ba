#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "byzgather/error.hpp"
#include "byzgather/planners.hpp"

namespace byzgather {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Schedule converge_on(const Instance& instance, Point2 target, std::string tag) {
  Schedule s;
  s.algorithm = std::move(tag);
  s.meta.meeting_points.push_back(target);
  for (Point2 p : instance.robots()) {
    Trajectory tr;
    tr.waypoints.push_back({0.0, p});
    if (const double d = dist(p, target); d > 0.0) tr.waypoints.push_back({d, target});
    s.trajectories.push_back(std::move(tr));
  }
  return s;
}

bool all_coincide(const std::vector<Point2>& pts, double tol) {
  return std::all_of(pts.begin(), pts.end(), [&](Point2 p) { return dist(p, pts[0]) <= tol; });
}

// Robots closer than kEpsMeet are merged onto their common centroid.
void snap_clusters(std::vector<Point2>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pts[i] != pts[j] && dist(pts[i], pts[j]) <= kEpsMeet) {
        parent[find(i)] = find(j);
        any = true;
      }
  if (!any) return;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) parent[find(i)] = find(j);

  std::vector<Point2> sum(n);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sum[find(i)] = sum[find(i)] + pts[i];
    ++count[find(i)];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (count[root] > 1) pts[i] = (1.0 / static_cast<double>(count[root])) * sum[root];
  }
}

struct CellIndex {
  long long x, y;
  friend bool operator==(CellIndex, CellIndex) = default;
};

// Cells of side `side` with one cell centred on the origin; each cell owns its
// top and right edges and its top-right corner.
CellIndex cell_of(Point2 scaled, double side) {
  return {static_cast<long long>(std::ceil(scaled.x / side - 0.5)),
          static_cast<long long>(std::ceil(scaled.y / side - 0.5))};
}

}  // namespace

Schedule plan_mec(const Instance& instance) {
  return converge_on(instance, min_enclosing_circle(instance.robots()).center, "mec");
}

Schedule plan_centerpoint(const Instance& instance) {
  const std::size_t n = instance.size();
  if (static_cast<std::size_t>(instance.budget()) >= ceil_div(n, 3))
    throw Error(ErrorCode::BudgetTooLarge, "centerpoint requires F < ceil(n/3)");
  return converge_on(instance, centerpoint(instance.robots()), "centerpoint");
}

Schedule plan_hamsandwich(const Instance& instance) {
  const std::size_t n = instance.size();
  if (static_cast<std::size_t>(instance.budget()) >= ceil_div(n, 2))
    throw Error(ErrorCode::BudgetTooLarge, "hamsandwich requires F < ceil(n/2)");
  return converge_on(instance, median_line_pair(instance.robots()).crossing, "hamsandwich");
}

GridParams GridParams::defaults(const Instance& instance) {
  GridParams p;
  if (all_coincide(instance.robots(), kEpsGeo)) {
    p.d_eps = 1.0;
    return p;
  }
  p.d_eps = closest_distinct_pair(instance.robots()).distance / 64.0;
  return p;
}

Schedule plan_grid(const Instance& instance) { return plan_grid(instance, GridParams::defaults(instance)); }

Schedule plan_grid(const Instance& instance, const GridParams& params) {
  if (!(params.d_eps > 0.0) || !std::isfinite(params.d_eps))
    throw Error(ErrorCode::BadParams, "d_eps must be positive");
  const auto& robots = instance.robots();
  const std::size_t n = robots.size();

  Schedule s;
  s.algorithm = "grid";
  s.meta.d_eps = params.d_eps;
  s.meta.budget_overruns = 0;
  s.trajectories.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.trajectories[i].waypoints.push_back({0.0, robots[i]});
  if (all_coincide(robots, 0.0)) return s;

  double diameter = 0.0;
  for (Point2 p : robots)
    for (Point2 q : robots) diameter = std::max(diameter, dist(p, q));
  const int max_level =
      params.max_level > 0 ? params.max_level
                           : static_cast<int>(std::ceil(std::log2(std::max(diameter / params.d_eps, 1.0)))) + 4;

  std::vector<Point2> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = (1.0 / params.d_eps) * robots[i];

  std::vector<Point2> current = robots;
  double start = 0.0;
  for (int level = 1; level <= max_level; ++level) {
    const double side = std::ldexp(1.0, level);
    std::vector<CellIndex> cells(n);
    std::vector<Point2> target(n);
    double longest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cells[i] = cell_of(scaled[i], side);
      target[i] = (params.d_eps * side) * Point2{static_cast<double>(cells[i].x), static_cast<double>(cells[i].y)};
      longest = std::max(longest, dist(current[i], target[i]));
    }
    const double budget = std::sqrt(2.0) * std::ldexp(params.d_eps, level - 1);
    if (longest > budget * (1.0 + kEpsGeo)) ++*s.meta.budget_overruns;
    const double leg = std::max(budget, longest);
    const bool together = std::all_of(cells.begin(), cells.end(), [&](CellIndex c) { return c == cells[0]; });
    const double leg_end = together ? start + longest : start + leg;

    for (std::size_t i = 0; i < n; ++i) {
      auto& wps = s.trajectories[i].waypoints;
      const double travel = dist(current[i], target[i]);
      if (travel > 0.0) wps.push_back({start + travel, target[i]});
      if (leg_end > wps.back().t) wps.push_back({leg_end, target[i]});
    }
    if (together) {
      s.meta.meeting_points.push_back(target[0]);
      return s;
    }
    current = target;
    start += leg;
  }
  throw std::logic_error("grid rendezvous did not gather within " + std::to_string(max_level) + " levels");
}

std::vector<SsiStep> ssi_steps(const std::vector<Point2>& robots) {
  std::vector<SsiStep> steps;
  std::vector<Point2> pos = robots;
  snap_clusters(pos);
  while (!all_coincide(pos, 0.0)) {
    const ClosestPair cp = closest_distinct_pair(pos);
    SsiStep step;
    step.a = cp.i;
    step.b = cp.j;
    step.d = midpoint(pos[cp.i], pos[cp.j]);
    step.step = 0.5 * cp.distance;
    step.before = pos;
    for (Point2& p : pos) {
      const double gap = dist(p, step.d);
      p = gap <= step.step + kEpsGeo ? step.d : p + (step.step / gap) * (step.d - p);
    }
    snap_clusters(pos);
    step.after = pos;
    steps.push_back(std::move(step));
  }
  return steps;
}

Schedule plan_ssi(const Instance& instance) {
  const auto& robots = instance.robots();
  Schedule s;
  s.algorithm = "ssi";
  s.trajectories.resize(robots.size());
  for (std::size_t i = 0; i < robots.size(); ++i) s.trajectories[i].waypoints.push_back({0.0, robots[i]});
  double t = 0.0;
  for (const SsiStep& step : ssi_steps(robots)) {
    t += step.step;
    for (std::size_t i = 0; i < robots.size(); ++i) s.trajectories[i].waypoints.push_back({t, step.after[i]});
    s.meta.meeting_points.push_back(step.d);
  }
  return s;
}

std::string_view auto_algorithm(const Instance& instance) {
  const auto n = instance.size();
  const auto f = static_cast<std::size_t>(instance.budget());
  const auto ssi_limit = static_cast<std::size_t>(std::floor(32.0 * std::sqrt(2.0))) - 2;
  if (f == 0) return "mec";
  if (f == 1) return "opt-f1";
  if (f < ceil_div(n, 3)) return "centerpoint";
  if (f < ceil_div(n, 2)) return "hamsandwich";
  if (f <= ssi_limit) return "ssi";
  return "grid";
}

Schedule plan_auto(const Instance& instance) { return plan_by_name(instance, auto_algorithm(instance)); }

Schedule plan_by_name(const Instance& instance, std::string_view name, std::optional<double> d_eps) {
  if (name == "mec") return plan_mec(instance);
  if (name == "opt-f1") return plan_opt_f1(instance);
  if (name == "tri") return plan_tri(instance);
  if (name == "centerpoint") return plan_centerpoint(instance);
  if (name == "hamsandwich") return plan_hamsandwich(instance);
  if (name == "ssi") return plan_ssi(instance);
  if (name == "grid") {
    GridParams params = GridParams::defaults(instance);
    if (d_eps) params.d_eps = *d_eps;
    return plan_grid(instance, params);
  }
  if (name == "auto") {
    const std::string_view chosen = auto_algorithm(instance);
    return plan_by_name(instance, chosen, chosen == "grid" ? d_eps : std::nullopt);
  }
  throw Error(ErrorCode::BadParams, "unknown algorithm: " + std::string(name));
}

}  // namespace byzgather
