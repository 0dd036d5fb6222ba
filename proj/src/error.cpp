#include "byzgather/error.hpp"

namespace byzgather {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::AllCoincident: return "AllCoincident";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::WrongBudget: return "WrongBudget";
    case ErrorCode::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::SubsetNeverGathers: return "SubsetNeverGathers";
    case ErrorCode::DegenerateRatio: return "DegenerateRatio";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace byzgather
