#include "copsim/errors.hpp"

namespace copsim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::non_square: return "NonSquare";
    case ErrorCode::order_too_small: return "OrderTooSmall";
    case ErrorCode::non_positive_entry: return "NonPositiveEntry";
    case ErrorCode::reciprocity_violation: return "ReciprocityViolation";
    case ErrorCode::invalid_disturbance: return "InvalidDisturbance";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace copsim
