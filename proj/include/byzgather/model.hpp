#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "byzgather/geom.hpp"

namespace byzgather {

// Distance under which robots count as co-located.
inline constexpr double kEpsMeet = 1e-7;

// Largest instance for which every reliable subset is enumerated.
inline constexpr std::size_t kMaxEnumerated = 24;

/// Robot start positions plus the byzantine budget F.
/// Requires n >= 2, 0 <= F <= n - 2 and finite coordinates.
class Instance {
 public:
  Instance(std::vector<Point2> robots, int budget);

  const std::vector<Point2>& robots() const { return robots_; }
  std::size_t size() const { return robots_.size(); }
  int budget() const { return budget_; }

 private:
  std::vector<Point2> robots_;
  int budget_;
};

/// A subset of robot indices; bit i selects robot i (n <= 64).
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask full(std::size_t n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static SubsetMask all_but(std::size_t n, std::size_t omitted) {
    return SubsetMask(full(n).bits() & ~(std::uint64_t{1} << omitted));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  int count() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  std::vector<std::size_t> indices() const;
  std::vector<Point2> select(const std::vector<Point2>& points) const;

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Waypoint {
  double t = 0.0;
  Point2 p;
};

/// Piecewise-linear motion through timed waypoints, constant after the last.
struct Trajectory {
  std::vector<Waypoint> waypoints;

  Point2 position(double t) const;
  double end_time() const { return waypoints.empty() ? 0.0 : waypoints.back().t; }
};

struct ScheduleMeta {
  std::vector<Point2> meeting_points;  // D, then D' when present
  std::optional<double> predicted_cr;
  std::optional<double> d_eps;
  std::optional<int> budget_overruns;

  friend bool operator==(const ScheduleMeta&, const ScheduleMeta&) = default;
};

struct Schedule {
  std::string algorithm;
  std::vector<Trajectory> trajectories;
  ScheduleMeta meta;

  double horizon() const;
};

struct GatherReport {
  SubsetMask subset;
  double gather_time = 0.0;
  double optimal_time = 0.0;
  double cr = 1.0;
};

enum class ViolationKind { Speed, Start, NonMonotone, RobotCount };

struct Violation {
  ViolationKind kind;
  std::size_t robot = 0;
  std::size_t waypoint = 0;
  std::string detail;
};

/// Radius of the MEC of the selected robots. Throws Error(EmptySet).
double optimal_gather_time(const Instance& instance, SubsetMask subset);

/// First time all selected robots coincide, or nullopt if they never do.
///
/// Every selected robot moves linearly between consecutive waypoint events,
/// so the squared distance to a reference robot is a quadratic in time and
/// its sublevel sets are intervals in closed form. The first event interval
/// in which all robots come within kEpsMeet is located, and within that window
/// the function returns the earliest instant of closest approach (the true
/// meeting instant, up to rounding) rather than the time the kEpsMeet ball is
/// first entered. Throws Error(EmptySet).
std::optional<double> gather_time(const Schedule& schedule, SubsetMask subset);

/// Largest distance of a selected robot from the first selected one.
double spread_at(const Schedule& schedule, SubsetMask subset, double t);

/// Speed, start-position, monotonicity and robot-count violations.
std::vector<Violation> validate_schedule(const Instance& instance, const Schedule& schedule);

/// All masks with popcount >= max(2, n - F) in ascending order.
/// Throws Error(TooLarge) above kMaxEnumerated robots.
std::vector<SubsetMask> enumerate_reliable_subsets(const Instance& instance);

}  // namespace byzgather
