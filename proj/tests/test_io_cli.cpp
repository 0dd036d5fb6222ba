#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "byzgather/cli.hpp"
#include "byzgather/error.hpp"
#include "byzgather/io.hpp"
#include "byzgather/svg.hpp"
#include "support.hpp"

using namespace byzgather;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "byzgather_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  write_file(p.string(), text);
  return p.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(CliConfig cfg) {
  std::ostringstream out, err;
  const int code = run_command(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

const std::string kLineJson = R"({"robots": [[0, 0], [0.1, 0], [5, 0]], "F": 1})";

}  // namespace

TEST_CASE("instance JSON round trip is bit exact") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst(testing_support::random_points(rng, 5), 2);
    const Instance back = parse_instance(dump_instance(inst));
    REQUIRE(back.budget() == 2);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      REQUIRE(std::memcmp(&back.robots()[i].x, &inst.robots()[i].x, sizeof(double)) == 0);
      REQUIRE(std::memcmp(&back.robots()[i].y, &inst.robots()[i].y, sizeof(double)) == 0);
    }
  }
}

TEST_CASE("schedule JSON round trip is bit exact") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst(testing_support::random_points(rng, 6), trial % 2 ? 1 : 4);
    const Schedule s = plan_auto(inst);
    const Schedule back = parse_schedule(dump_schedule(s));
    REQUIRE(back.algorithm == s.algorithm);
    REQUIRE(back.meta == s.meta);
    REQUIRE(back.trajectories.size() == s.trajectories.size());
    for (std::size_t i = 0; i < s.trajectories.size(); ++i) {
      const auto& a = s.trajectories[i].waypoints;
      const auto& b = back.trajectories[i].waypoints;
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        REQUIRE(a[k].t == b[k].t);
        REQUIRE(a[k].p == b[k].p);
      }
    }
    REQUIRE(dump_schedule(back) == dump_schedule(s));
  }
}

TEST_CASE("malformed JSON is rejected") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::EmptySet;
  };
  CHECK(code([] { parse_instance("{"); }) == ErrorCode::Parse);
  CHECK(code([] { parse_instance(R"({"robots": [[0, 0]]})"); }) == ErrorCode::Parse);
  CHECK(code([] { parse_instance(R"({"robots": [[0, "a"], [1, 1]], "F": 0})"); }) == ErrorCode::Parse);
  CHECK(code([] { parse_instance(R"({"robots": [[0, 0]], "F": 0})"); }) == ErrorCode::InvalidInstance);
  CHECK(code([] { parse_schedule(R"({"trajectories": [[[0, 1]]]})"); }) == ErrorCode::Parse);
  CHECK(code([] { parse_schedule(R"({"trajectories": [[]]})"); }) == ErrorCode::Parse);
}

TEST_CASE("cli plan") {
  CliConfig cfg;
  cfg.command = "plan";
  cfg.input = put("line.json", kLineJson);
  cfg.algorithm = "opt-f1";
  cfg.output = (scratch_dir() / "line_sched.json").string();
  Run r = run(cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("predicted_cr 1.020408") != std::string::npos);
  CHECK(r.out.find("horizon 2.5") != std::string::npos);

  cfg.input = put("pair.json", R"({"robots": [[0, 0], [2, 0]], "F": 0})");
  cfg.algorithm = "mec";
  r = run(cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("horizon 1\n") != std::string::npos);

  cfg.input = put("square.json", R"({"robots": [[0, 0], [1, 0], [1, 1], [0, 1]], "F": 2})");
  cfg.algorithm = "centerpoint";
  CHECK(run(cfg).code == kExitPrecondition);

  cfg.input = put("broken.json", "{\"robots\": [[0, 0], ");
  r = run(cfg);
  CHECK(r.code == kExitInput);
  CHECK(!r.err.empty());

  cfg.input = (scratch_dir() / "missing.json").string();
  CHECK(run(cfg).code == kExitInput);
}

TEST_CASE("cli eval reproduces the in-process report") {
  const Instance inst = parse_instance(kLineJson);
  CliConfig cfg;
  cfg.command = "plan";
  cfg.input = put("line.json", kLineJson);
  cfg.algorithm = "opt-f1";
  cfg.output = (scratch_dir() / "line_sched.json").string();
  REQUIRE(run(cfg).code == kExitOk);

  cfg.command = "eval";
  cfg.schedule = cfg.output;
  cfg.output = (scratch_dir() / "line_report.json").string();
  const Run r = run(cfg);
  REQUIRE(r.code == kExitOk);
  CHECK(read_file(cfg.output) == dump_report(overall_cr(inst, plan_opt_f1(inst))));
  CHECK(r.out.find("argmax 0x6") != std::string::npos);

  cfg.command = "adversary";
  cfg.output.clear();
  const Run a = run(cfg);
  CHECK(a.code == kExitOk);
  CHECK(a.out == dump_report(overall_cr(inst, plan_opt_f1(inst))));
  CHECK(a.err.find("overall_cr 1.020408") != std::string::npos);

  cfg.subsets = "3,0x6";
  const Run some = run(cfg);
  CHECK(some.code == kExitOk);
  CHECK(count(some.out, "\"mask\"") == 2);
  cfg.subsets = "8";
  CHECK(run(cfg).code == kExitInput);
}

TEST_CASE("cli adversary: ssi rows respect f + 2") {
  const std::string inst_json = R"({"robots": [[0, 0], [1, 0], [10, 0], [4, 7], [6, 2]], "F": 3})";
  CliConfig cfg;
  cfg.command = "plan";
  cfg.input = put("five.json", inst_json);
  cfg.algorithm = "ssi";
  cfg.output = (scratch_dir() / "five_sched.json").string();
  REQUIRE(run(cfg).code == kExitOk);
  cfg.command = "adversary";
  cfg.schedule = cfg.output;
  cfg.output.clear();
  const Run r = run(cfg);
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["subsets"]) {
    const int f = 5 - __builtin_popcountll(row["mask"].get<std::uint64_t>());
    CHECK(row["bound"].get<double>() == f + 2);
    CHECK(row["cr"].get<double>() <= f + 2 + 1e-9);
  }
  CHECK(j["bound_satisfied"].get<bool>());
}

TEST_CASE("cli adversary: schedule that never gathers") {
  CliConfig cfg;
  cfg.command = "adversary";
  cfg.input = put("pair.json", R"({"robots": [[0, 0], [2, 0]], "F": 0})");
  cfg.schedule = put("still.json", R"({"algorithm": "manual", "trajectories": [[[0, 0, 0]], [[0, 2, 0]]]})");
  CHECK(run(cfg).code == kExitEvaluation);
  cfg.schedule = put("fast.json", R"({"algorithm": "manual", "trajectories": [[[0, 0, 0], [0.5, 1, 0]], [[0, 2, 0]]]})");
  CHECK(run(cfg).code == kExitInput);
}

TEST_CASE("cli oracle") {
  CliConfig cfg;
  cfg.command = "oracle";
  cfg.input = put("eq.json", R"({"robots": [[0, 0], [1, 0], [0.5, 0.8660254037844386]], "F": 1})");
  Run r = run(cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("cr 1.1547") != std::string::npos);
  cfg.input = put("line.json", kLineJson);
  r = run(cfg);
  CHECK(r.out.find("cr 1.0204") != std::string::npos);
  cfg.input = put("pair.json", R"({"robots": [[0, 0], [2, 0]], "F": 0})");
  CHECK(run(cfg).code == kExitInput);
}

TEST_CASE("cli plot") {
  CliConfig cfg;
  cfg.command = "plan";
  cfg.input = put("line.json", kLineJson);
  cfg.algorithm = "opt-f1";
  cfg.output = (scratch_dir() / "line_sched.json").string();
  REQUIRE(run(cfg).code == kExitOk);
  cfg.command = "plot";
  cfg.schedule = cfg.output;
  cfg.output.clear();
  Run r = run(cfg);
  REQUIRE(r.code == kExitOk);
  CHECK(count(r.out, "<g class=\"cross\"") == 2);
  CHECK(count(r.out, "<polyline") == 3);
  CHECK(r.out == run(cfg).out);

  cfg.input = put("pair.json", R"({"robots": [[0, 0], [2, 0]], "F": 0})");
  cfg.schedule = put("pair_sched.json", dump_schedule(plan_mec(parse_instance(read_file(cfg.input)))));
  r = run(cfg);
  CHECK(count(r.out, "<polyline") == 2);
  CHECK(r.out.find("stroke-dasharray") != std::string::npos);

  cfg.schedule = put("bad.json", "[1, 2");
  CHECK(run(cfg).code == kExitInput);
}

TEST_CASE("cli bench and unknown command") {
  CliConfig cfg;
  cfg.command = "bench";
  cfg.instances = 3;
  const Run r = run(cfg);
  CHECK(r.code == kExitOk);
  CHECK(count(r.out, "| ok") == 5);
  CHECK(r.out == run(cfg).out);
  cfg.command = "frobnicate";
  CHECK(run(cfg).code == kExitInput);
}
