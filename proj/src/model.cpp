#include "byzgather/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "byzgather/error.hpp"

namespace byzgather {

Instance::Instance(std::vector<Point2> robots, int budget)
    : robots_(std::move(robots)), budget_(budget) {
  const auto n = static_cast<int>(robots_.size());
  if (n < 2) throw Error(ErrorCode::InvalidInstance, "need at least two robots");
  if (budget_ < 0 || budget_ > n - 2)
    throw Error(ErrorCode::InvalidInstance, "byzantine budget must satisfy 0 <= F <= n - 2");
  for (Point2 p : robots_)
    if (!is_finite(p)) throw Error(ErrorCode::InvalidInstance, "robot coordinates must be finite");
}

std::vector<std::size_t> SubsetMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<Point2> SubsetMask::select(const std::vector<Point2>& points) const {
  std::vector<Point2> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (contains(i)) out.push_back(points[i]);
  return out;
}

Point2 Trajectory::position(double t) const {
  if (waypoints.empty()) return {};
  if (t <= waypoints.front().t) return waypoints.front().p;
  if (t >= waypoints.back().t) return waypoints.back().p;
  auto it = std::upper_bound(waypoints.begin(), waypoints.end(), t,
                             [](double v, const Waypoint& w) { return v < w.t; });
  const Waypoint& b = *it;
  const Waypoint& a = *(it - 1);
  const double span = b.t - a.t;
  if (span <= 0.0) return b.p;
  return a.p + ((t - a.t) / span) * (b.p - a.p);
}

double Schedule::horizon() const {
  double h = 0.0;
  for (const Trajectory& tr : trajectories) h = std::max(h, tr.end_time());
  return h;
}

double optimal_gather_time(const Instance& instance, SubsetMask subset) {
  const std::vector<Point2> pts = subset.select(instance.robots());
  if (pts.empty()) throw Error(ErrorCode::EmptySet, "optimal time of an empty subset");
  return min_enclosing_circle(pts).radius;
}

namespace {

struct Window {
  double lo = 0.0;
  double hi = -1.0;
  bool empty() const { return hi < lo; }
};

// Relative linear motion of one robot with respect to the reference robot
// over an event interval, in local time tau in [0, len].
struct RelativeMotion {
  Point2 offset;
  Point2 velocity;
};

Window within(const std::vector<RelativeMotion>& motions, double len, double level) {
  Window w{0.0, len};
  for (const RelativeMotion& m : motions) {
    const double speed2 = dot(m.velocity, m.velocity);
    if (speed2 < 1e-30) {
      if (norm(m.offset) > level) return {};
      continue;
    }
    const double closest = -dot(m.offset, m.velocity) / speed2;
    const double miss = cross(m.offset, m.velocity);
    const double slack = level * level * speed2 - miss * miss;
    if (slack < 0.0) return {};
    const double half = std::sqrt(slack) / speed2;
    w.lo = std::max(w.lo, closest - half);
    w.hi = std::min(w.hi, closest + half);
    if (w.empty()) return {};
  }
  return w;
}

constexpr double kLevelSlack = 1e-12;

double spread_end(const std::vector<RelativeMotion>& motions, double len) {
  double worst = 0.0;
  for (const RelativeMotion& m : motions) worst = std::max(worst, norm(m.offset + len * m.velocity));
  return worst;
}

struct IntervalMinimum {
  double level;  // minimal spread on the interval
  double tau;    // earliest local time attaining it
};

IntervalMinimum minimize_spread(const std::vector<RelativeMotion>& motions, double len) {
  double lo = 0.0;
  double hi = kEpsMeet;
  for (int it = 0; it < 64; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (within(motions, len, mid).empty())
      lo = mid;
    else
      hi = mid;
  }
  const Window w = within(motions, len, hi + kLevelSlack);
  return {hi, w.empty() ? 0.0 : w.lo};
}

}  // namespace

double spread_at(const Schedule& schedule, SubsetMask subset, double t) {
  const std::vector<std::size_t> idx = subset.indices();
  if (idx.empty()) return 0.0;
  const Point2 ref = schedule.trajectories.at(idx[0]).position(t);
  double worst = 0.0;
  for (std::size_t i : idx) worst = std::max(worst, dist(schedule.trajectories.at(i).position(t), ref));
  return worst;
}

std::optional<double> gather_time(const Schedule& schedule, SubsetMask subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySet, "gather time of an empty subset");
  const std::vector<std::size_t> idx = subset.indices();
  if (idx.back() >= schedule.trajectories.size())
    throw Error(ErrorCode::BadParams, "subset selects robots outside the schedule");
  if (idx.size() == 1) return 0.0;

  std::vector<double> events{0.0};
  for (std::size_t i : idx)
    for (const Waypoint& w : schedule.trajectories[i].waypoints) events.push_back(w.t);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  if (events.size() == 1) events.push_back(events[0]);

  const Trajectory& ref = schedule.trajectories[idx[0]];
  std::optional<double> best_time;
  double best_level = 0.0;

  for (std::size_t k = 0; k + 1 < events.size(); ++k) {
    const double t0 = events[k];
    const double t1 = events[k + 1];
    const double len = t1 - t0;
    const Point2 r0 = ref.position(t0);
    const Point2 r1 = ref.position(t1);
    std::vector<RelativeMotion> motions;
    motions.reserve(idx.size() - 1);
    for (std::size_t j = 1; j < idx.size(); ++j) {
      const Trajectory& tr = schedule.trajectories[idx[j]];
      const Point2 a = tr.position(t0) - r0;
      const Point2 b = tr.position(t1) - r1;
      motions.push_back({a, len > 0.0 ? (1.0 / len) * (b - a) : Point2{}});
    }

    if (!best_time && within(motions, len, kEpsMeet).empty()) continue;
    if (best_time && within(motions, len, best_level).empty()) return best_time;

    const IntervalMinimum m = minimize_spread(motions, len);
    if (best_time && m.level >= best_level - kLevelSlack) return best_time;
    best_time = t0 + m.tau;
    best_level = m.level;
    // Unless the minimum sits at the right end, the robots separate again
    // before the next event.
    if (spread_end(motions, len) > m.level + kLevelSlack) return best_time;
  }
  return best_time;
}

std::vector<Violation> validate_schedule(const Instance& instance, const Schedule& schedule) {
  std::vector<Violation> out;
  if (schedule.trajectories.size() != instance.size()) {
    std::ostringstream msg;
    msg << "schedule has " << schedule.trajectories.size() << " trajectories for "
        << instance.size() << " robots";
    out.push_back({ViolationKind::RobotCount, 0, 0, msg.str()});
    return out;
  }
  for (std::size_t r = 0; r < instance.size(); ++r) {
    const auto& wps = schedule.trajectories[r].waypoints;
    if (wps.empty() || wps[0].t != 0.0 || dist(wps[0].p, instance.robots()[r]) > kEpsGeo) {
      out.push_back({ViolationKind::Start, r, 0, "trajectory does not start at the robot at t = 0"});
    }
    for (std::size_t k = 1; k < wps.size(); ++k) {
      const double dt = wps[k].t - wps[k - 1].t;
      if (!(dt >= 0.0)) {
        out.push_back({ViolationKind::NonMonotone, r, k, "timestamps decrease"});
        continue;
      }
      const double step = dist(wps[k].p, wps[k - 1].p);
      if (step > dt * (1.0 + kEpsGeo) + kEpsGeo) {
        std::ostringstream msg;
        msg << "moves " << step << " in " << dt;
        out.push_back({ViolationKind::Speed, r, k, msg.str()});
      }
    }
  }
  return out;
}

std::vector<SubsetMask> enumerate_reliable_subsets(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kMaxEnumerated) throw Error(ErrorCode::TooLarge, "too many robots to enumerate subsets");
  const int min_size = std::max(2, static_cast<int>(n) - instance.budget());
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const SubsetMask m(bits);
    if (m.count() >= min_size) out.push_back(m);
  }
  return out;
}

}  // namespace byzgather
