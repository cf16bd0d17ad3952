#pragma once

#include <cstddef>
#include <vector>

#include "sqz/distribution.hpp"

namespace sqz {

/// Per-m and aggregate discrepancies of `b` against the reference `a`.
///
/// Relative errors are NaN where |P_a| <= 1e-12 or either entry is flagged.
/// Flagged entries are left out of the total variation.
struct ComparisonReport {
  Method method_a = Method::exact_quadrature;
  Method method_b = Method::exact_quadrature;
  unsigned n = 0;
  double r = 0;
  std::vector<double> per_m_abs_error;
  std::vector<double> per_m_rel_error;
  double total_variation = 0;
  long last_max_location_a = -1;  // -1: no qualifying maximum in range
  long last_max_location_b = -1;
  double rel_error_at_last_max = 0;  // at last_max_location_a; NaN if unavailable
  bool last_max_flagged = false;     // b is flagged at last_max_location_a
  std::size_t flagged_tangency_a = 0;
  std::size_t flagged_tangency_b = 0;
  std::size_t flagged_clamped_a = 0;
  std::size_t flagged_clamped_b = 0;
};

inline constexpr double relative_error_floor = 1e-12;
inline constexpr double last_maximum_threshold = 1e-10;

/// Throws Error{incompatible_distribution} when (n, r) differ or either is empty.
ComparisonReport compare(const Distribution& a, const Distribution& b);

/// Largest m = n (mod 2) that is a strict local maximum of the m = n (mod 2)
/// subsequence, among entries above 1e-10 times the largest value.
/// The first entry qualifies when it beats its successor; the last entry
/// never does. Throws Error{range_too_short} when nothing qualifies.
unsigned last_maximum(const Distribution& d);

/// Every strict local maximum of the same subsequence, ascending.
std::vector<unsigned> local_maxima(const Distribution& d);

}  // namespace sqz
