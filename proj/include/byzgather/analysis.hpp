#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "byzgather/model.hpp"
#include "byzgather/planners.hpp"

namespace byzgather {

struct AdversaryReport {
  std::string algorithm;
  std::vector<GatherReport> subsets;  // ascending mask order
  std::vector<std::optional<double>> subset_bounds;  // aligned with subsets
  double overall_cr = 1.0;
  SubsetMask argmax;
  std::optional<double> bound;  // theoretical bound on overall_cr, if the algorithm has one
  bool bound_satisfied = true;
};

/// CR of one reliable subset. Throws Error(SubsetNeverGathers) when the subset
/// never meets and Error(DegenerateRatio) when T_* = 0 but the schedule takes
/// positive time.
GatherReport competitive_ratio(const Instance& instance, const Schedule& schedule, SubsetMask subset);

/// Worst CR over all reliable subsets (first maximal mask wins ties).
AdversaryReport overall_cr(const Instance& instance, const Schedule& schedule);
/// Same, restricted to the given masks.
AdversaryReport overall_cr(const Instance& instance, const Schedule& schedule,
                           const std::vector<SubsetMask>& masks);

/// Guaranteed per-subset CR bound of the algorithm that produced `schedule`,
/// when it has one.
std::optional<double> subset_bound(const Instance& instance, const Schedule& schedule, SubsetMask subset);

struct LowerBound {
  double value = 1.0;
  bool unbounded = false;  // r_1 = 0: every robot coincides
};

/// r_S / r_1 for F = 1.
LowerBound lower_bound_f1(const Instance& instance);

struct LbCertificate {
  bool applicable = false;  // |Sup[S]| = 2
  double q = 0.0;           // r_0 r_S / r_1, radius of every disk
  bool intersects = false;  // support segment meets the disk intersection
  LineSeg support_segment;
  std::optional<LineSeg> overlap;  // part of the support segment inside every disk
  Polygon region;                  // inscribed polygon approximation of the disk intersection
};

LbCertificate check_lb_achievable(const Instance& instance);

struct OracleResult {
  Point2 d;
  double cr = 1.0;
  double slack = 0.0;  // resolution * (1/r_0 + 1/r_1)
};

/// Brute-force minimiser of the single-point objective on a lattice of the
/// given spacing (default 1e-3 r_S) over the safe disk, followed by three
/// x10 local refinements. Dominated lattice regions are skipped with a
/// Lipschitz bound, which leaves the lattice optimum unchanged.
OracleResult oracle_opt_point(const Instance& instance, std::optional<double> resolution = std::nullopt);

struct BenchRow {
  std::string row;        // budget regime and bound
  std::string algorithm;
  int instances = 0;
  double max_cr = 0.0;
  double max_bound_ratio = 0.0;  // max of cr / bound over all checked values
  bool satisfied = true;
};

struct BenchConfig {
  int instances_per_row = 100;
  std::uint64_t seed = 1;
  int min_n = 4;
  int max_n = 9;
  double coord_max = 100.0;
};

/// Runs each budget regime's planner over random instances (deterministic for
/// a given seed) and compares the worst observed CR with its bound.
std::vector<BenchRow> bench_table(const BenchConfig& config);

/// Uniform random instance in [0, coord_max]^2.
Instance random_instance(std::uint64_t seed, std::size_t n, int budget, double coord_max = 100.0);

}  // namespace byzgather
