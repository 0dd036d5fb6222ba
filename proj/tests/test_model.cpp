#include <doctest.h>

#include <cmath>

#include "byzgather/error.hpp"
#include "byzgather/model.hpp"
#include "byzgather/planners.hpp"

using namespace byzgather;

namespace {

Schedule from_paths(std::vector<std::vector<Waypoint>> paths) {
  Schedule s;
  s.algorithm = "manual";
  for (auto& w : paths) s.trajectories.push_back({std::move(w)});
  return s;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_NOTHROW(Instance({{0, 0}, {1, 0}}, 0));
  CHECK(code_of([] { Instance({{0, 0}}, 0); }) == ErrorCode::InvalidInstance);
  CHECK(code_of([] { Instance({{0, 0}, {1, 0}}, 1); }) == ErrorCode::InvalidInstance);
  CHECK(code_of([] { Instance({{0, 0}, {1, 0}, {2, 2}}, -1); }) == ErrorCode::InvalidInstance);
  CHECK(code_of([] { Instance({{0, 0}, {NAN, 0}}, 0); }) == ErrorCode::InvalidInstance);
  CHECK(code_of([] { Instance({{0, 0}, {INFINITY, 0}}, 0); }) == ErrorCode::InvalidInstance);
}

TEST_CASE("subset masks") {
  const SubsetMask m(0b1011);
  CHECK(m.count() == 3);
  CHECK(m.contains(0));
  CHECK(!m.contains(2));
  CHECK(m.indices() == std::vector<std::size_t>{0, 1, 3});
  CHECK(SubsetMask::full(3).bits() == 7);
  CHECK(SubsetMask::all_but(3, 1).bits() == 5);
}

TEST_CASE("reliable subset enumeration") {
  const Instance tri({{0, 0}, {1, 0}, {0, 1}}, 1);
  const auto masks = enumerate_reliable_subsets(tri);
  REQUIRE(masks.size() == 4);
  CHECK(masks[0].bits() == 0b011);
  CHECK(masks[1].bits() == 0b101);
  CHECK(masks[2].bits() == 0b110);
  CHECK(masks[3].bits() == 0b111);

  CHECK(enumerate_reliable_subsets(Instance({{0, 0}, {1, 0}, {0, 1}}, 0)).size() == 1);
  CHECK(enumerate_reliable_subsets(Instance({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2)).size() == 11);

  std::vector<Point2> many(25, {0, 0});
  for (std::size_t i = 0; i < many.size(); ++i) many[i].x = static_cast<double>(i);
  CHECK(code_of([&] { enumerate_reliable_subsets(Instance(many, 1)); }) == ErrorCode::TooLarge);
}

TEST_CASE("optimal gather time") {
  const Instance pair({{0, 0}, {2, 0}}, 0);
  CHECK(optimal_gather_time(pair, SubsetMask(0b11)) == doctest::Approx(1.0));
  CHECK(optimal_gather_time(pair, SubsetMask(0b01)) == 0.0);
  const Instance tri({{0, 0}, {2, 0}, {1, 2}}, 0);
  CHECK(optimal_gather_time(tri, SubsetMask(0b111)) == doctest::Approx(1.25));
  CHECK(code_of([&] { optimal_gather_time(tri, SubsetMask(0)); }) == ErrorCode::EmptySet);
}

TEST_CASE("trajectory interpolation") {
  const Trajectory tr{{{0, {0, 0}}, {2, {2, 0}}, {3, {2, 0}}, {4, {2, 1}}}};
  CHECK(tr.position(-1).x == 0.0);
  CHECK(tr.position(1).x == doctest::Approx(1.0));
  CHECK(tr.position(2.5).x == doctest::Approx(2.0));
  CHECK(tr.position(3.5).y == doctest::Approx(0.5));
  CHECK(tr.position(10).y == 1.0);
  CHECK(tr.end_time() == 4.0);
}

TEST_CASE("gather time: examples") {
  const Schedule meet = from_paths({{{0, {0, 0}}, {1, {1, 0}}}, {{0, {2, 0}}, {1, {1, 0}}}});
  CHECK(*gather_time(meet, SubsetMask(0b11)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*gather_time(meet, SubsetMask(0b01)) == 0.0);
  CHECK(code_of([&] { gather_time(meet, SubsetMask(0)); }) == ErrorCode::EmptySet);

  // Two robots passing through each other meet mid-leg.
  const Schedule cross = from_paths({{{0, {0, 0}}, {2, {2, 0}}}, {{0, {2, 0}}, {2, {0, 0}}}});
  CHECK(*gather_time(cross, SubsetMask(0b11)) == doctest::Approx(1.0).epsilon(1e-12));

  const Schedule apart = from_paths({{{0, {0, 0}}, {1, {0, 1}}}, {{0, {2, 0}}, {1, {2, 1}}}});
  CHECK(!gather_time(apart, SubsetMask(0b11)).has_value());

  // Hand simulation: pair reaches (0.05, 0) at 0.05, everybody at (2.5, 0) at 2.5.
  const Instance line({{0, 0}, {0.1, 0}, {5, 0}}, 1);
  const Schedule alg2 = plan_single_point(line, {0.05, 0});
  CHECK(*gather_time(alg2, SubsetMask(0b011)) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(*gather_time(alg2, SubsetMask(0b111)) == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("gather time: closest approach inside the meeting window") {
  // Robots graze each other within kEpsMeet but never coincide before t = 3.
  const double gap = 0.5 * kEpsMeet;
  const Schedule graze = from_paths({{{0, {0, 0}}, {2, {2, 0}}, {3, {3, 0}}},
                                     {{0, {0, gap}}, {2, {2, gap}}, {3, {3, 0}}}});
  const auto t = gather_time(graze, SubsetMask(0b11));
  REQUIRE(t.has_value());
  // The kEpsMeet ball is entered at t = 0; the meeting is at the end of the last leg.
  CHECK(*t > 2.99);
  CHECK(*t <= 3.0);
  CHECK(spread_at(graze, SubsetMask(0b11), *t) <= 2 * kEpsMeet);
}

TEST_CASE("validate schedule") {
  const Instance pair({{0, 0}, {2, 0}}, 0);
  CHECK(validate_schedule(pair, plan_mec(pair)).empty());

  const Schedule jump = from_paths({{{0, {0, 0}}, {1, {2, 0}}}, {{0, {2, 0}}}});
  auto v = validate_schedule(pair, jump);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::Speed);
  CHECK(v[0].robot == 0);

  const Schedule shifted = from_paths({{{0, {0.5, 0}}}, {{0, {2, 0}}}});
  v = validate_schedule(pair, shifted);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::Start);

  const Schedule backwards = from_paths({{{0, {0, 0}}, {1, {0.5, 0}}, {0.5, {0.5, 0}}}, {{0, {2, 0}}}});
  v = validate_schedule(pair, backwards);
  REQUIRE(!v.empty());
  CHECK(v[0].kind == ViolationKind::NonMonotone);

  const Schedule short_one = from_paths({{{0, {0, 0}}}});
  v = validate_schedule(pair, short_one);
  REQUIRE(!v.empty());
  CHECK(v[0].kind == ViolationKind::RobotCount);
}
