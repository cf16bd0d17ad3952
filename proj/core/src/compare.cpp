#include "sqz/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sqz/error.hpp"

namespace sqz {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

bool usable(const Distribution& d, std::size_t m) {
  return !d.flagged(m) && std::isfinite(d.values[m]);
}

}  // namespace

std::vector<unsigned> local_maxima(const Distribution& d) {
  double peak = 0;
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (usable(d, m)) peak = std::max(peak, d.values[m]);
  }
  const double threshold = last_maximum_threshold * peak;

  std::vector<unsigned> maxima;
  const std::size_t first = d.n % 2;
  for (std::size_t m = first; m < d.size(); m += 2) {
    if (!usable(d, m) || !(d.values[m] > threshold)) continue;
    const bool has_next = m + 2 < d.size();
    if (!has_next) continue;
    if (!usable(d, m + 2) || !(d.values[m] > d.values[m + 2])) continue;
    if (m >= first + 2 && !(usable(d, m - 2) && d.values[m] > d.values[m - 2])) continue;
    maxima.push_back(static_cast<unsigned>(m));
  }
  return maxima;
}

unsigned last_maximum(const Distribution& d) {
  const auto maxima = local_maxima(d);
  if (maxima.empty()) {
    throw Error(ErrorCode::range_too_short,
                "last_maximum: no strict local maximum within m <= " + std::to_string(d.size() - 1));
  }
  return maxima.back();
}

ComparisonReport compare(const Distribution& a, const Distribution& b) {
  if (a.n != b.n || a.r != b.r) {
    throw Error(ErrorCode::incompatible_distribution,
                "compare: distributions describe different states (n=" + std::to_string(a.n) +
                    ", r=" + std::to_string(a.r) + ") vs (n=" + std::to_string(b.n) +
                    ", r=" + std::to_string(b.r) + ")");
  }
  if (a.size() == 0 || b.size() == 0) {
    throw Error(ErrorCode::incompatible_distribution, "compare: empty distribution");
  }

  ComparisonReport report;
  report.method_a = a.method;
  report.method_b = b.method;
  report.n = a.n;
  report.r = a.r;

  const std::size_t shared = std::min(a.size(), b.size());
  report.per_m_abs_error.resize(shared);
  report.per_m_rel_error.resize(shared);
  double variation = 0;
  for (std::size_t m = 0; m < shared; ++m) {
    if (!usable(a, m) || !usable(b, m)) {
      report.per_m_abs_error[m] = nan;
      report.per_m_rel_error[m] = nan;
      continue;
    }
    const double diff = std::abs(a.values[m] - b.values[m]);
    variation += diff;
    report.per_m_abs_error[m] = diff;
    report.per_m_rel_error[m] =
        std::abs(a.values[m]) > relative_error_floor ? diff / std::abs(a.values[m]) : nan;
  }
  report.total_variation = variation / 2;

  try {
    report.last_max_location_a = last_maximum(a);
  } catch (const Error&) {
    report.last_max_location_a = -1;
  }
  try {
    report.last_max_location_b = last_maximum(b);
  } catch (const Error&) {
    report.last_max_location_b = -1;
  }

  report.rel_error_at_last_max = nan;
  if (report.last_max_location_a >= 0 &&
      static_cast<std::size_t>(report.last_max_location_a) < shared) {
    const auto m = static_cast<std::size_t>(report.last_max_location_a);
    report.last_max_flagged = b.flagged(m);
    report.rel_error_at_last_max = report.per_m_rel_error[m];
  }

  report.flagged_tangency_a = a.count(EntryFlag::tangency);
  report.flagged_tangency_b = b.count(EntryFlag::tangency);
  report.flagged_clamped_a = a.count(EntryFlag::clamped);
  report.flagged_clamped_b = b.count(EntryFlag::clamped);
  return report;
}

}  // namespace sqz
