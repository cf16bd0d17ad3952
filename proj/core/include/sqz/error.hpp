#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqz {

enum class ErrorCode {
  invalid_argument,
  no_convergence,           // root finding or adaptive integration ran out of budget
  forbidden_region,         // |x| beyond the classical turning point
  turning_point_region,     // inside the WKB guard band
  degenerate_squeezing,     // r == 0 where a crossing is required
  no_crossing,              // classical rings do not intersect
  tangency,                 // rings touch instead of crossing; stationary phase diverges
  quadrature_order,         // requested order above the configured cap
  recurrence_instability,   // loss of precision detected; fall back to quadrature
  incompatible_distribution,
  range_too_short,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sqz
