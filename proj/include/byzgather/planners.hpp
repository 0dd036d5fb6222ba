#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "byzgather/model.hpp"

namespace byzgather {

// Radii of the n subsets that omit one robot, ascending. Entry 0 is S_0 (the
// tightest group of n - 1 robots), entry 1 is S_1.
struct SubsetRadius {
  std::size_t omitted = 0;
  double radius = 0.0;
};
using SubsetRadiusOrder = std::vector<SubsetRadius>;

/// Throws Error(TooSmall) for n < 3. Radii within kEpsGeo of each other are
/// treated as tied and ordered by omitted index.
SubsetRadiusOrder subset_radius_order(const Instance& instance);

/// Triangle relabelled so that a = |BC| <= b = |AC| <= c = |AB|.
struct TriangleInstance {
  Point2 A, B, C;
  double a = 0.0, b = 0.0, c = 0.0;
  double beta = 0.0;   // angle at B
  double gamma = 0.0;  // angle at C
  double area = 0.0;   // Heron

  /// Throws Error(Degenerate) for collinear or coincident vertices.
  static TriangleInstance from_points(Point2 p, Point2 q, Point2 r);
};

struct MeetingPoint {
  Point2 d;
  double predicted_cr = 1.0;
  std::size_t omitted = 0;           // robot left out of S_0
  std::optional<std::size_t> edge;   // FVD edge index; nullopt for Center[S_0] or a degenerate rule
};

/// max{far/r_0, (far + |C D|) / (2 r_1)} with far the largest distance from D
/// to S_0 and C the robot left out of S_0.
double single_point_objective(std::span<const Point2> s0, Point2 omitted, double r0, double r1, Point2 d);

/// Best first meeting point for F = 1: golden-section search along every
/// clamped furthest-point Voronoi edge of S_0, plus Center[S_0].
MeetingPoint opt_point_f1(const Instance& instance);

/// Closed-form optimum for three robots.
struct TriangleOptimum {
  Point2 d;
  double predicted_cr = 1.0;
  double tan_phi = 0.0;
  bool on_long_side = false;  // tan(beta) <= sin(gamma): D lies on AB and CR = c/b
};
TriangleOptimum tri_opt_point(const TriangleInstance& tri);

struct GridParams {
  double d_eps = 0.0;
  int max_level = 0;  // 0: derived from the instance

  /// d_eps = closest distinct pair / 64 (or 1 if all robots coincide).
  static GridParams defaults(const Instance& instance);
};

// One round of shrink-shortest-interval.
struct SsiStep {
  std::size_t a = 0, b = 0;
  Point2 d;
  double step = 0.0;
  std::vector<Point2> before;
  std::vector<Point2> after;
};

Schedule plan_mec(const Instance& instance);
/// All robots head for d; once n - 1 have arrived the laggard and the group
/// meet halfway. Throws Error(TooSmall) for n < 3.
Schedule plan_single_point(const Instance& instance, Point2 d);
/// Throws Error(WrongBudget) unless F = 1.
Schedule plan_opt_f1(const Instance& instance);
/// Three-robot F = 1 schedule from the closed form.
Schedule plan_tri(const Instance& instance);
/// Throws Error(BudgetTooLarge) unless F < ceil(n/3).
Schedule plan_centerpoint(const Instance& instance);
/// Throws Error(BudgetTooLarge) unless F < ceil(n/2).
Schedule plan_hamsandwich(const Instance& instance);
/// Throws Error(BadParams) for d_eps <= 0.
Schedule plan_grid(const Instance& instance, const GridParams& params);
Schedule plan_grid(const Instance& instance);
Schedule plan_ssi(const Instance& instance);
std::vector<SsiStep> ssi_steps(const std::vector<Point2>& robots);
/// Dispatch on (n, F): mec, opt-f1, centerpoint, hamsandwich, ssi, grid.
Schedule plan_auto(const Instance& instance);

/// Name plan_auto would pick: "mec", "opt-f1", "centerpoint", "hamsandwich",
/// "ssi" or "grid".
std::string_view auto_algorithm(const Instance& instance);

/// Runs a planner by CLI name. Throws Error(BadParams) for unknown names.
Schedule plan_by_name(const Instance& instance, std::string_view name,
                      std::optional<double> d_eps = std::nullopt);

}  // namespace byzgather
