#include "sqz/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace sqz {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::exact_quadrature: return "exact_quadrature";
    case Method::exact_recurrence: return "exact_recurrence";
    case Method::wkb: return "wkb";
    case Method::cohen_closed_form: return "cohen_closed_form";
    case Method::wigner_ring: return "wigner_ring";
  }
  return "unknown";
}

std::string_view to_string(EntryFlag flag) noexcept {
  switch (flag) {
    case EntryFlag::none: return "";
    case EntryFlag::tangency: return "tangency";
    case EntryFlag::clamped: return "clamped";
  }
  return "";
}

std::string_view cli_name(Method method) noexcept {
  switch (method) {
    case Method::exact_quadrature: return "exact";
    case Method::exact_recurrence: return "exact-recurrence";
    case Method::wkb: return "wkb";
    case Method::cohen_closed_form: return "cohen";
    case Method::wigner_ring: return "wigner-ring";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : {Method::exact_quadrature, Method::exact_recurrence, Method::wkb,
                   Method::cohen_closed_form, Method::wigner_ring}) {
    if (name == cli_name(m)) return m;
  }
  return std::nullopt;
}

double Distribution::total() const noexcept {
  double sum = 0;
  for (double v : values) {
    if (std::isfinite(v)) sum += v;
  }
  return sum;
}

std::size_t Distribution::count(EntryFlag flag) const noexcept {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), flag));
}

unsigned default_m_max(unsigned n, double r) {
  const double edge = (2.0 * n + 1.0) * std::exp(2 * std::abs(r)) / 2;
  return static_cast<unsigned>(std::ceil(edge)) + 50;
}

}  // namespace sqz
