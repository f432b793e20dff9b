#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nashtoric {

enum class ErrorCode {
  malformed_input,
  dimension_mismatch,
  invalid_characteristic,
  not_pointed,
  not_full_group,
  not_full_dimensional,
  linearly_dependent,
  not_saturated,
  internal_invariant,
};

/// Stable machine-readable name of an error code, e.g. "E_NOT_POINTED".
std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by the library. Every failure carries a
/// code so that callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nashtoric
