#pragma once

#include <stdexcept>
#include <string>

namespace copsim {

enum class ErrorCode {
  non_square,
  order_too_small,
  non_positive_entry,
  reciprocity_violation,
  invalid_disturbance,
  invalid_config,
  no_convergence,
  parse_error,
  io_error,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace copsim
