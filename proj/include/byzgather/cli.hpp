#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace byzgather {

struct CliConfig {
  std::string command;   // plan, eval, adversary, oracle, bench, plot
  std::string input;     // instance JSON
  std::string schedule;  // schedule JSON (eval, adversary, plot)
  std::string output;    // empty: stdout
  std::string algorithm = "auto";
  std::optional<double> d_eps;
  std::optional<double> resolution;
  std::uint64_t seed = 1;
  std::string subsets = "all";  // or comma-separated masks
  int instances = 100;          // bench rows
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitEvaluation = 4;

int cmd_plan(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_adversary(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_plot(const CliConfig& config, std::ostream& out, std::ostream& err);

int run_command(const CliConfig& config, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace byzgather
