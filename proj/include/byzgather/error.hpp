#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace byzgather {

enum class ErrorCode {
  EmptySet,
  AllCoincident,
  Degenerate,
  TooLarge,
  TooSmall,
  WrongBudget,
  BudgetTooLarge,
  BadParams,
  InvalidInstance,
  SubsetNeverGathers,
  DegenerateRatio,
  Parse,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type; callers that
// need to branch (the CLI exit-code contract) switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace byzgather
