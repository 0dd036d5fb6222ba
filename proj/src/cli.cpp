#include "byzgather/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "byzgather/analysis.hpp"
#include "byzgather/error.hpp"
#include "byzgather/io.hpp"
#include "byzgather/svg.hpp"

namespace byzgather {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string mask_text(SubsetMask m) {
  std::ostringstream o;
  o << "0x" << std::hex << m.bits();
  return o.str();
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidInstance:
      return kExitInput;
    case ErrorCode::SubsetNeverGathers:
    case ErrorCode::DegenerateRatio:
      return kExitEvaluation;
    default:
      return kExitPrecondition;
  }
}

void emit(const CliConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) out << text;
  else write_file(config.output, text);
}

// Summary lines go to stdout, unless stdout already carries the payload.
std::ostream& summary_stream(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return config.output.empty() ? err : out;
}

Instance load_instance(const CliConfig& config) {
  if (config.input.empty()) throw Error(ErrorCode::Parse, "--input is required");
  return parse_instance(read_file(config.input));
}

// Schedule file checked against the instance it claims to serve.
Schedule load_schedule(const CliConfig& config, const Instance& instance) {
  if (config.schedule.empty()) throw Error(ErrorCode::Parse, "--schedule is required");
  Schedule s = parse_schedule(read_file(config.schedule));
  const std::vector<Violation> bad = validate_schedule(instance, s);
  if (!bad.empty()) throw Error(ErrorCode::Parse, "schedule is not valid for the instance: " + bad.front().detail);
  return s;
}

std::vector<SubsetMask> parse_masks(const CliConfig& config, const Instance& instance) {
  if (config.subsets == "all") return enumerate_reliable_subsets(instance);
  std::vector<SubsetMask> masks;
  std::stringstream ss(config.subsets);
  std::string item;
  const SubsetMask full = SubsetMask::full(instance.size());
  while (std::getline(ss, item, ',')) {
    std::uint64_t bits = 0;
    try {
      std::size_t used = 0;
      bits = std::stoull(item, &used, 0);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad subset mask '" + item + "'");
    }
    if (bits == 0 || (bits & ~full.bits()) != 0)
      throw Error(ErrorCode::Parse, "subset mask '" + item + "' does not name robots of this instance");
    masks.emplace_back(bits);
  }
  if (masks.empty()) throw Error(ErrorCode::Parse, "--subsets lists no masks");
  return masks;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitEvaluation;
  }
}

}  // namespace

int cmd_plan(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = load_instance(config);
    const Schedule s = plan_by_name(instance, config.algorithm, config.d_eps);
    emit(config, dump_schedule(s), out);
    std::ostream& info = summary_stream(config, out, err);
    info << "algorithm " << s.algorithm << "\n" << "horizon " << fmt(s.horizon()) << "\n";
    if (s.meta.predicted_cr) info << "predicted_cr " << fmt(*s.meta.predicted_cr) << "\n";
    return kExitOk;
  });
}

namespace {

int report_command(const CliConfig& config, std::ostream& out, std::ostream& err, bool table) {
  return guarded(err, [&] {
    const Instance instance = load_instance(config);
    const Schedule s = load_schedule(config, instance);
    const AdversaryReport rep = overall_cr(instance, s, parse_masks(config, instance));
    emit(config, dump_report(rep), out);
    std::ostream& info = summary_stream(config, out, err);
    if (table) {
      for (std::size_t k = 0; k < rep.subsets.size(); ++k) {
        const GatherReport& r = rep.subsets[k];
        info << mask_text(r.subset) << " gather " << fmt(r.gather_time) << " optimal " << fmt(r.optimal_time)
             << " cr " << fmt(r.cr);
        if (rep.subset_bounds[k]) info << " bound " << fmt(*rep.subset_bounds[k]);
        info << "\n";
      }
    }
    info << "overall_cr " << fmt(rep.overall_cr) << "\n" << "argmax " << mask_text(rep.argmax) << "\n";
    if (rep.bound) info << "bound " << fmt(*rep.bound) << (rep.bound_satisfied ? " satisfied" : " VIOLATED") << "\n";
    return kExitOk;
  });
}

}  // namespace

int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return report_command(config, out, err, true);
}

int cmd_adversary(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return report_command(config, out, err, false);
}

int cmd_oracle(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = load_instance(config);
    if (instance.size() < 3) {
      err << "error: the oracle needs at least three robots\n";
      return kExitInput;
    }
    const OracleResult r = oracle_opt_point(instance, config.resolution);
    const nlohmann::json j{{"d", {r.d.x, r.d.y}}, {"cr", r.cr}, {"slack", r.slack}};
    if (!config.output.empty()) write_file(config.output, j.dump() + "\n");
    out << "D " << fmt(r.d.x) << " " << fmt(r.d.y) << "\n" << "cr " << fmt(r.cr) << "\n";
    return kExitOk;
  });
}

int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BenchConfig bc;
    bc.seed = config.seed;
    bc.instances_per_row = config.instances;
    const std::vector<BenchRow> rows = bench_table(bc);
    nlohmann::json j = nlohmann::json::array();
    bool all_ok = true;
    for (const BenchRow& r : rows) {
      out << r.row << " | " << r.algorithm << " | instances " << r.instances << " | max_cr " << fmt(r.max_cr)
          << " | max cr/bound " << fmt(r.max_bound_ratio) << " | " << (r.satisfied ? "ok" : "VIOLATED") << "\n";
      j.push_back({{"row", r.row},
                   {"algorithm", r.algorithm},
                   {"instances", r.instances},
                   {"max_cr", r.max_cr},
                   {"max_bound_ratio", r.max_bound_ratio},
                   {"satisfied", r.satisfied}});
      all_ok = all_ok && r.satisfied;
    }
    if (!config.output.empty()) write_file(config.output, j.dump(2) + "\n");
    return all_ok ? kExitOk : kExitEvaluation;
  });
}

int cmd_plot(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = load_instance(config);
    const Schedule s = load_schedule(config, instance);
    emit(config, render_svg(instance, s), out);
    return kExitOk;
  });
}

int run_command(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "plan") return cmd_plan(config, out, err);
  if (config.command == "eval") return cmd_eval(config, out, err);
  if (config.command == "adversary") return cmd_adversary(config, out, err);
  if (config.command == "oracle") return cmd_oracle(config, out, err);
  if (config.command == "bench") return cmd_bench(config, out, err);
  if (config.command == "plot") return cmd_plot(config, out, err);
  err << "error: unknown command '" << config.command << "'\n";
  return kExitInput;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Planner and adversarial evaluator for gathering robots with byzantine faults"};
  app.require_subcommand(1);
  CliConfig config;

  auto common = [&](CLI::App* sub, bool needs_schedule) {
    sub->add_option("--input", config.input, "instance JSON")->required();
    if (needs_schedule) sub->add_option("--schedule", config.schedule, "schedule JSON")->required();
    sub->add_option("--output", config.output, "output file (default stdout)");
    sub->add_option("--seed", config.seed, "random seed");
  };

  CLI::App* plan = app.add_subcommand("plan", "compute a schedule");
  common(plan, false);
  plan->add_option("--alg", config.algorithm, "planner")
      ->check(CLI::IsMember({"mec", "opt-f1", "tri", "centerpoint", "hamsandwich", "grid", "ssi", "auto"}));
  plan->add_option("--d-eps", config.d_eps, "grid cell size")->check(CLI::PositiveNumber);

  for (const char* name : {"eval", "adversary"}) {
    CLI::App* sub = app.add_subcommand(name, std::string(name) == "eval" ? "per-subset competitive ratios"
                                                                          : "worst-case competitive ratio");
    common(sub, true);
    sub->add_option("--subsets", config.subsets, "'all' or comma-separated masks");
  }

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force optimal meeting point for F = 1");
  common(oracle, false);
  oracle->add_option("--resolution", config.resolution, "lattice spacing")->check(CLI::PositiveNumber);

  CLI::App* bench = app.add_subcommand("bench", "random-instance benchmark of every planner");
  bench->add_option("--output", config.output, "JSON table");
  bench->add_option("--seed", config.seed, "random seed");
  bench->add_option("--instances", config.instances, "instances per row")->check(CLI::PositiveNumber);

  CLI::App* plot = app.add_subcommand("plot", "SVG plot of a schedule");
  common(plot, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  config.command = app.get_subcommands().front()->get_name();
  return run_command(config, std::cout, std::cerr);
}

}  // namespace byzgather
