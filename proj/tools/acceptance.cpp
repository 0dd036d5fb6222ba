// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "byzgather/analysis.hpp"
#include "byzgather/error.hpp"

using namespace byzgather;

namespace {

int failures = 0;
long long schedules_checked = 0;
long long speed_violations = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Every schedule built here goes through the validity audit.
Schedule audited(const Instance& inst, Schedule s) {
  ++schedules_checked;
  for (const Violation& v : validate_schedule(inst, s))
    if (v.kind == ViolationKind::Speed) ++speed_violations;
  return s;
}

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  std::size_t n(int lo, int hi) { return static_cast<std::size_t>(std::uniform_int_distribution<int>(lo, hi)(rng)); }
  int budget(int lo, int hi) { return std::uniform_int_distribution<int>(lo, std::max(lo, hi))(rng); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  Instance instance(std::size_t size, int f) { return random_instance(rng(), size, f, 100.0); }
};

void sandwich() {
  Sampler s(101);
  const auto start = std::chrono::steady_clock::now();
  int bad = 0;
  double worst_low = INFINITY, worst_high = INFINITY;
  for (int k = 0; k < 1000; ++k) {
    const Instance inst = s.instance(s.n(3, 8), 1);
    const double cr = overall_cr(inst, audited(inst, plan_opt_f1(inst))).overall_cr;
    const double lb = lower_bound_f1(inst).value;
    const OracleResult o = oracle_opt_point(inst, 1e-3 * min_enclosing_circle(inst.robots()).radius);
    worst_low = std::min(worst_low, cr - (lb - 1e-9));
    worst_high = std::min(worst_high, o.cr + o.slack - cr);
    if (!(cr >= lb - 1e-9 && cr <= o.cr + o.slack)) ++bad;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, "F=1 optimality sandwich", bad == 0 && secs < 60.0,
         fmt("1000 instances, %d outside [lb - 1e-9, oracle + slack], min margins %.3g / %.3g, %.2f s", bad,
             worst_low, worst_high, secs));
}

void triangles() {
  Sampler s(202);
  double worst = 0.0;
  int done = 0;
  while (done < 10000) {
    const std::vector<Point2> p{{s.uniform(0, 100), s.uniform(0, 100)},
                                {s.uniform(0, 100), s.uniform(0, 100)},
                                {s.uniform(0, 100), s.uniform(0, 100)}};
    TriangleInstance tri;
    try {
      tri = TriangleInstance::from_points(p[0], p[1], p[2]);
    } catch (const Error&) {
      continue;
    }
    worst = std::max(worst, std::abs(tri_opt_point(tri).predicted_cr - opt_point_f1(Instance(p, 1)).predicted_cr));
    ++done;
  }
  const double eq = tri_opt_point(TriangleInstance::from_points({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2})).predicted_cr;
  const double thin = tri_opt_point(TriangleInstance::from_points({0, 0}, {1, 0}, {3, 0.1})).predicted_cr;
  const double eq_err = std::abs(eq - 2.0 / std::sqrt(3.0));
  const double thin_err = std::abs(thin - std::sqrt(9.01 / 4.01));
  report(2, "Three-robot closed form", worst <= 1e-6 && eq_err <= 1e-9 && thin_err <= 1e-9,
         fmt("10^4 triangles max |closed - search| %.3g; equilateral err %.3g; thin err %.3g", worst, eq_err,
             thin_err));
}

void bounded_planner(int id, const char* name, const char* alg, double bound, auto budget_cap) {
  Sampler s(300 + id);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = s.n(4, 12);
    const Instance inst = s.instance(n, s.budget(0, budget_cap(n)));
    worst = std::max(worst, overall_cr(inst, audited(inst, plan_by_name(inst, alg))).overall_cr);
  }
  report(id, name, worst <= bound + 1e-9, fmt("500 instances, max overall CR %.9g, bound %.9g", worst, bound));
}

void grid() {
  Sampler s(505);
  double worst_slack = INFINITY, worst_cr = 0.0;
  int bad = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = s.n(2, 9);
    const Instance inst = s.instance(n, s.budget(0, static_cast<int>(n) - 2));
    const Schedule sched = audited(inst, plan_grid(inst));
    const AdversaryReport rep = overall_cr(inst, sched);
    const std::vector<Point2> pts = rep.argmax.select(inst.robots());
    double ab = INFINITY;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (dist(pts[i], pts[j]) > kEpsGeo) ab = std::min(ab, dist(pts[i], pts[j]));
    const double bound = 2 * std::numbers::sqrt2 * (16 + *sched.meta.d_eps / ab);
    worst_cr = std::max(worst_cr, rep.overall_cr);
    worst_slack = std::min(worst_slack, bound + 1e-6 - rep.overall_cr);
    if (rep.overall_cr > bound + 1e-6) ++bad;
  }
  report(5, "Grid rendezvous bound", bad == 0,
         fmt("200 instances, max overall CR %.6g, min margin to bound %.6g", worst_cr, worst_slack));
}

void ssi() {
  Sampler s(606);
  int bad_cr = 0, bad_shrink = 0, checked_steps = 0;
  double worst_ratio = 0.0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = s.n(3, 9);
    const Instance inst = s.instance(n, s.budget(0, static_cast<int>(n) - 2));
    const AdversaryReport rep = overall_cr(inst, audited(inst, plan_ssi(inst)));
    for (const GatherReport& r : rep.subsets) {
      const double bound = static_cast<double>(n - r.subset.count()) + 2.0;
      worst_ratio = std::max(worst_ratio, r.cr / bound);
      if (r.cr > bound + 1e-9) ++bad_cr;
    }
    const std::vector<SubsetMask> masks = enumerate_reliable_subsets(inst);
    for (const SsiStep& st : ssi_steps(inst.robots())) {
      for (SubsetMask m : masks) {
        const Circle before = min_enclosing_circle(m.select(st.before));
        const Circle after = min_enclosing_circle(m.select(st.after));
        const double limit = before.contains(st.d) ? before.radius - st.step / 2 : before.radius;
        if (after.radius > limit + kEpsGeo) ++bad_shrink;
        ++checked_steps;
      }
    }
  }
  report(6, "SSI per-subset bound and shrink", bad_cr == 0 && bad_shrink == 0,
         fmt("500 instances, %d subsets over f+2, max cr/(f+2) %.6g; %d shrink failures in %d subset-steps", bad_cr,
             worst_ratio, bad_shrink, checked_steps));
}

void achievable_lower_bound() {
  Sampler s(707);
  int built = 0, bad = 0;
  double worst = 0.0;
  for (int attempt = 0; attempt < 5000 && built < 100; ++attempt) {
    const double len = s.uniform(50, 100), th = s.uniform(0, 2 * std::numbers::pi);
    const Point2 a{s.uniform(0, 20), s.uniform(0, 20)};
    const Point2 b = a + len * Point2{std::cos(th), std::sin(th)};
    const Point2 hub = a + s.uniform(0.15, 0.45) * (b - a);
    std::vector<Point2> pts{a, b};
    const std::size_t cluster = s.n(1, 5);
    const double spread = s.uniform(0.1, 3.0);
    for (std::size_t i = 0; i < cluster; ++i) pts.push_back(hub + Point2{s.uniform(-spread, spread), s.uniform(-spread, spread)});
    const Instance inst(pts, 1);
    const LbCertificate cert = check_lb_achievable(inst);
    if (!(cert.applicable && cert.intersects)) continue;
    ++built;
    const double cr = overall_cr(inst, audited(inst, plan_opt_f1(inst))).overall_cr;
    const double target = lower_bound_f1(inst).value;
    worst = std::max(worst, std::abs(cr - target));
    if (std::abs(cr - target) > 1e-6) ++bad;
  }
  report(7, "Achievable lower bound", built >= 50 && bad == 0,
         fmt("%d certified instances, %d off r_S/r_1 by > 1e-6, max deviation %.3g", built, bad, worst));
}

void optimum_floor() {
  Sampler s(808);
  int bad = 0, evaluated = 0;
  double worst = INFINITY;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = s.n(3, 9);
    const auto pts = s.instance(n, 0).robots();
    for (const char* alg : {"mec", "opt-f1", "tri", "centerpoint", "hamsandwich", "grid", "ssi", "auto"}) {
      const std::string name = alg;
      int f = s.budget(0, static_cast<int>(n) - 2);
      if (name == "mec") f = 0;
      if (name == "opt-f1" || name == "tri") f = 1;
      if (name == "centerpoint") f = s.budget(0, static_cast<int>(ceil_div(n, 3)) - 1);
      if (name == "hamsandwich") f = s.budget(0, std::min<int>(static_cast<int>(ceil_div(n, 2)) - 1, static_cast<int>(n) - 2));
      if (name == "tri" && n != 3) continue;
      const Instance inst(pts, f);
      const Schedule sched = audited(inst, plan_by_name(inst, alg));
      for (SubsetMask m : enumerate_reliable_subsets(inst)) {
        const double gap = *gather_time(sched, m) - optimal_gather_time(inst, m);
        worst = std::min(worst, gap);
        if (gap < -1e-9) ++bad;
        ++evaluated;
      }
    }
  }
  report(8, "Optimal-time floor", bad == 0,
         fmt("%d (schedule, subset) pairs, %d below T* - 1e-9, min gather - T* = %.3g", evaluated, bad, worst));
}

void micro_instance() {
  const Instance inst({{0, 0}, {0.1, 0}, {5, 0}}, 1);
  const Schedule sched = audited(inst, plan_opt_f1(inst));
  const AdversaryReport rep = overall_cr(inst, sched);
  const double t1 = *gather_time(sched, SubsetMask(0b011));
  const Point2 d2 = sched.meta.meeting_points.size() == 2 ? sched.meta.meeting_points[1] : Point2{NAN, NAN};
  // Subsets in mask order {A,B}, {A,C}, {B,C}, {A,B,C}.
  const double expected[] = {1.0, 1.0, 2.5 / 2.45, 1.0};
  bool ok = rep.subsets.size() == 4 && std::abs(t1 - 0.05) <= 1e-9 && dist(d2, {2.5, 0}) <= 1e-9 &&
            std::abs(rep.overall_cr - 2.5 / 2.45) <= 1e-9;
  std::string crs;
  for (std::size_t k = 0; k < rep.subsets.size() && k < 4; ++k) {
    ok = ok && std::abs(rep.subsets[k].cr - expected[k]) <= 1e-9;
    crs += fmt("%s%.9g", k ? ", " : "", rep.subsets[k].cr);
  }
  report(10, "Worked micro-instance", ok,
         fmt("t1 %.9g, D' (%.9g, %.9g), subset CRs {%s}, overall %.9g", t1, d2.x, d2.y, crs.c_str(), rep.overall_cr));
}

}  // namespace

int main() {
  sandwich();
  triangles();
  bounded_planner(3, "Centerpoint bound", "centerpoint", 2.0,
                  [](std::size_t n) { return static_cast<int>(ceil_div(n, 3)) - 1; });
  bounded_planner(4, "Median-lines bound", "hamsandwich", 2.0 * std::numbers::sqrt2,
                  [](std::size_t n) { return static_cast<int>(ceil_div(n, 2)) - 1; });
  grid();
  ssi();
  achievable_lower_bound();
  optimum_floor();
  report(9, "Schedule validity", speed_violations == 0 && schedules_checked > 0,
         fmt("%lld schedules audited, %lld speed violations", schedules_checked, speed_violations));
  micro_instance();
  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
