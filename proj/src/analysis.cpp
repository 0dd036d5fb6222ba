#include "byzgather/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "byzgather/error.hpp"

namespace byzgather {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

constexpr double kBoundTol = 1e-9;

}  // namespace

GatherReport competitive_ratio(const Instance& instance, const Schedule& schedule, SubsetMask subset) {
  const std::optional<double> t = gather_time(schedule, subset);
  if (!t) throw Error(ErrorCode::SubsetNeverGathers, "subset never gathers under this schedule");
  GatherReport r;
  r.subset = subset;
  r.gather_time = *t;
  r.optimal_time = optimal_gather_time(instance, subset);
  if (r.optimal_time <= kEpsGeo) {
    if (r.gather_time > kEpsMeet)
      throw Error(ErrorCode::DegenerateRatio, "coincident subset takes positive time to gather");
    r.cr = 1.0;
  } else {
    r.cr = r.gather_time / r.optimal_time;
  }
  return r;
}

std::optional<double> subset_bound(const Instance& instance, const Schedule& schedule, SubsetMask subset) {
  const std::size_t n = instance.size();
  const auto missing = n - static_cast<std::size_t>(subset.count());
  const std::string& alg = schedule.algorithm;
  if (alg == "mec") return missing == 0 ? std::optional<double>(1.0) : std::nullopt;
  if (alg == "opt-f1" || alg == "tri") return schedule.meta.predicted_cr;
  if (alg == "centerpoint") return missing < ceil_div(n, 3) ? std::optional<double>(2.0) : std::nullopt;
  if (alg == "hamsandwich")
    return missing < ceil_div(n, 2) ? std::optional<double>(2.0 * std::numbers::sqrt2) : std::nullopt;
  if (alg == "ssi") return static_cast<double>(missing) + 2.0;
  if (alg == "grid" && schedule.meta.d_eps) {
    const std::vector<Point2> pts = subset.select(instance.robots());
    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (const double d = dist(pts[i], pts[j]); d > kEpsGeo) closest = std::min(closest, d);
    if (!std::isfinite(closest)) return 1.0;
    return 2.0 * std::numbers::sqrt2 * (16.0 + *schedule.meta.d_eps / closest);
  }
  return std::nullopt;
}

AdversaryReport overall_cr(const Instance& instance, const Schedule& schedule) {
  return overall_cr(instance, schedule, enumerate_reliable_subsets(instance));
}

AdversaryReport overall_cr(const Instance& instance, const Schedule& schedule,
                           const std::vector<SubsetMask>& masks) {
  AdversaryReport rep;
  rep.algorithm = schedule.algorithm;
  rep.overall_cr = 0.0;
  bool every_bounded = !masks.empty();
  double worst_bound = 0.0;
  for (SubsetMask m : masks) {
    GatherReport r = competitive_ratio(instance, schedule, m);
    if (r.cr > rep.overall_cr) {
      rep.overall_cr = r.cr;
      rep.argmax = m;
    }
    const std::optional<double> b = subset_bound(instance, schedule, m);
    rep.subset_bounds.push_back(b);
    if (b) {
      worst_bound = std::max(worst_bound, *b);
      if (r.cr > *b + kBoundTol * std::max(1.0, *b)) rep.bound_satisfied = false;
    } else {
      every_bounded = false;
    }
    rep.subsets.push_back(r);
  }
  if (every_bounded) rep.bound = worst_bound;
  return rep;
}

LowerBound lower_bound_f1(const Instance& instance) {
  const SubsetRadiusOrder order = subset_radius_order(instance);
  const double r_all = min_enclosing_circle(instance.robots()).radius;
  if (order[1].radius <= kEpsGeo) return {std::numeric_limits<double>::infinity(), true};
  return {r_all / order[1].radius, false};
}

LbCertificate check_lb_achievable(const Instance& instance) {
  const auto& robots = instance.robots();
  const Circle mec = min_enclosing_circle(robots);
  const std::vector<std::size_t> sup = support_set(robots, mec);
  const SubsetRadiusOrder order = subset_radius_order(instance);
  const double r0 = order[0].radius;
  const double r1 = order[1].radius;

  LbCertificate cert;
  cert.applicable = sup.size() == 2;
  cert.q = r1 > kEpsGeo ? r0 * mec.radius / r1 : 0.0;

  std::vector<Point2> s0;
  for (std::size_t i = 0; i < robots.size(); ++i)
    if (i != order[0].omitted) s0.push_back(robots[i]);

  constexpr int kSides = 256;
  if (cert.q > 0.0) {
    for (std::size_t k = 0; k < s0.size(); ++k) {
      if (k == 0) {
        for (int s = 0; s < kSides; ++s) {
          const double th = 2.0 * std::numbers::pi * s / kSides;
          cert.region.push_back(s0[0] + cert.q * Point2{std::cos(th), std::sin(th)});
        }
        continue;
      }
      // Inscribed polygon of disk k as the intersection of its chord half-planes.
      const double apothem = cert.q * std::cos(std::numbers::pi / kSides);
      for (int s = 0; s < kSides && !cert.region.empty(); ++s) {
        const double th = 2.0 * std::numbers::pi * (s + 0.5) / kSides;
        const Point2 inward{-std::cos(th), -std::sin(th)};
        cert.region = clip_halfplane(cert.region, inward, dot(inward, s0[k]) - apothem);
      }
    }
  } else {
    cert.region = {s0[0]};
  }

  if (!cert.applicable) return cert;
  cert.support_segment = {robots[sup[0]], robots[sup[1]]};

  // Exact test: parameter interval of the support segment inside every disk.
  const LineSeg& seg = cert.support_segment;
  const Point2 dir = seg.b - seg.a;
  const double len2 = dot(dir, dir);
  double lo = 0.0, hi = 1.0;
  const double radius = cert.q + kEpsGeo;
  for (Point2 p : s0) {
    const Point2 rel = seg.a - p;
    const double half_b = dot(rel, dir) / len2;
    const double c = (dot(rel, rel) - radius * radius) / len2;
    const double disc = half_b * half_b - c;
    if (disc < 0.0) {
      lo = 1.0;
      hi = 0.0;
      break;
    }
    lo = std::max(lo, -half_b - std::sqrt(disc));
    hi = std::min(hi, -half_b + std::sqrt(disc));
  }
  cert.intersects = lo <= hi;
  if (cert.intersects) cert.overlap = LineSeg{seg.at(lo), seg.at(hi)};
  return cert;
}

namespace {

// Deliberately separate from the planner: plain lattice search of
//   max{ far/r0, (far + |CD|) / (2 r1) },  far = max_{p in S_0} |pD|.
struct OracleObjective {
  std::vector<Point2> s0;
  Point2 lone;
  double r0, r1;

  double operator()(Point2 d) const {
    double far = 0.0;
    for (Point2 p : s0) far = std::max(far, std::hypot(p.x - d.x, p.y - d.y));
    return std::max(far / r0, (far + std::hypot(lone.x - d.x, lone.y - d.y)) / (2.0 * r1));
  }
};

struct LatticeSearch {
  const OracleObjective& f;
  Point2 origin;
  double spacing;
  double lipschitz;
  double best;
  Point2 best_at;

  Point2 at(long long i, long long j) const {
    return origin + spacing * Point2{static_cast<double>(i), static_cast<double>(j)};
  }

  void visit(long long i0, long long i1, long long j0, long long j1) {
    const long long ic = i0 + (i1 - i0) / 2;
    const long long jc = j0 + (j1 - j0) / 2;
    const Point2 c = at(ic, jc);
    const double v = f(c);
    if (v < best) {
      best = v;
      best_at = c;
    }
    if (i0 == i1 && j0 == j1) return;
    const double di = static_cast<double>(std::max(ic - i0, i1 - ic));
    const double dj = static_cast<double>(std::max(jc - j0, j1 - jc));
    if (v - lipschitz * spacing * std::hypot(di, dj) >= best) return;
    const long long im = i0 + (i1 - i0) / 2;
    const long long jm = j0 + (j1 - j0) / 2;
    visit(i0, im, j0, jm);
    if (im + 1 <= i1) visit(im + 1, i1, j0, jm);
    if (jm + 1 <= j1) visit(i0, im, jm + 1, j1);
    if (im + 1 <= i1 && jm + 1 <= j1) visit(im + 1, i1, jm + 1, j1);
  }
};

}  // namespace

OracleResult oracle_opt_point(const Instance& instance, std::optional<double> resolution) {
  if (instance.size() < 3) throw Error(ErrorCode::TooSmall, "oracle needs three robots");
  const SubsetRadiusOrder order = subset_radius_order(instance);
  const double r0 = order[0].radius;
  const double r1 = order[1].radius;
  OracleObjective f{{}, instance.robots()[order[0].omitted], r0, r1};
  for (std::size_t i = 0; i < instance.size(); ++i)
    if (i != order[0].omitted) f.s0.push_back(instance.robots()[i]);

  if (r1 <= kEpsGeo) return {f.s0[0], 1.0, 0.0};
  if (r0 <= kEpsGeo) return {f.s0[0], dist(f.lone, f.s0[0]) / (2.0 * r1), 0.0};

  const double r_all = min_enclosing_circle(instance.robots()).radius;
  const double h = resolution.value_or(1e-3 * r_all);
  if (!(h > 0.0)) throw Error(ErrorCode::BadParams, "oracle resolution must be positive");

  const Point2 center0 = min_enclosing_circle(f.s0).center;
  const double reach = r0 * f(center0) + r_all;
  const auto m = static_cast<long long>(std::ceil(reach / h));

  LatticeSearch search{f, center0, h, 1.0 / r0, f(center0), center0};
  search.visit(-m, m, -m, m);

  // Local x10 refinements around the lattice optimum.
  double step = h;
  for (int level = 0; level < 3; ++level) {
    const Point2 around = search.best_at;
    step /= 10.0;
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j) {
        const Point2 d = around + step * Point2{static_cast<double>(i), static_cast<double>(j)};
        if (const double v = f(d); v < search.best) {
          search.best = v;
          search.best_at = d;
        }
      }
  }
  return {search.best_at, search.best, h * (1.0 / r0 + 1.0 / r1)};
}

Instance random_instance(std::uint64_t seed, std::size_t n, int budget, double coord_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, coord_max);
  std::vector<Point2> pts(n);
  for (Point2& p : pts) {
    p.x = coord(rng);
    p.y = coord(rng);
  }
  return Instance(std::move(pts), budget);
}

std::vector<BenchRow> bench_table(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(config.seed);
  auto pick_n = [&] {
    return static_cast<std::size_t>(std::uniform_int_distribution<int>(config.min_n, config.max_n)(rng));
  };
  auto pick_budget = [&](int hi) { return std::uniform_int_distribution<int>(0, std::max(0, hi))(rng); };

  struct RowSpec {
    const char* label;
    const char* algorithm;
  };
  const RowSpec specs[] = {
      {"F = 1: optimal", "opt-f1"},
      {"F < ceil(n/3): 2", "centerpoint"},
      {"F < ceil(n/2): 2 sqrt 2", "hamsandwich"},
      {"F <= 43: F + 2", "ssi"},
      {"F > 43: 2 sqrt 2 (16 + d_eps/|AB|)", "grid"},
  };
  for (const RowSpec& spec : specs) {
    BenchRow row{spec.label, spec.algorithm, 0, 0.0, 0.0, true};
    const std::string alg = spec.algorithm;
    for (int k = 0; k < config.instances_per_row; ++k) {
      const std::size_t n = std::max<std::size_t>(pick_n(), alg == "opt-f1" ? 3 : 2);
      int budget = 0;
      if (alg == "opt-f1") budget = 1;
      else if (alg == "centerpoint") budget = pick_budget(static_cast<int>(ceil_div(n, 3)) - 1);
      else if (alg == "hamsandwich") budget = pick_budget(std::min<int>(static_cast<int>(ceil_div(n, 2)) - 1, static_cast<int>(n) - 2));
      else budget = pick_budget(static_cast<int>(n) - 2);

      const Instance inst = random_instance(rng(), n, budget, config.coord_max);
      const Schedule sched = plan_by_name(inst, alg);
      const AdversaryReport rep = overall_cr(inst, sched);
      row.max_cr = std::max(row.max_cr, rep.overall_cr);

      if (alg == "opt-f1") {
        const OracleResult oracle = oracle_opt_point(inst);
        const double bound = oracle.cr + oracle.slack;
        row.max_bound_ratio = std::max(row.max_bound_ratio, rep.overall_cr / bound);
        if (rep.overall_cr > bound + kBoundTol) row.satisfied = false;
      } else {
        for (const GatherReport& r : rep.subsets) {
          const std::optional<double> b = subset_bound(inst, sched, r.subset);
          if (!b) continue;
          row.max_bound_ratio = std::max(row.max_bound_ratio, r.cr / *b);
        }
        if (!rep.bound_satisfied) row.satisfied = false;
      }
      ++row.instances;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace byzgather
