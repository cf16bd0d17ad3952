#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sqz {

enum class Method { exact_quadrature, exact_recurrence, wkb, cohen_closed_form, wigner_ring };

enum class EntryFlag { none, tangency, clamped };

std::string_view to_string(Method method) noexcept;
std::string_view to_string(EntryFlag flag) noexcept;

/// CLI spelling: exact | exact-recurrence | wkb | cohen | wigner-ring.
std::string_view cli_name(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Photon-number distribution P_m, m = 0 .. values.size()-1, of |n, r>.
///
/// Tangency-flagged entries carry NaN: the stationary-phase amplitude has no
/// finite value there. Clamped entries are exact results below 1e-300 that
/// were set to zero.
struct Distribution {
  unsigned n = 0;
  double r = 0;
  Method method = Method::exact_quadrature;
  std::vector<double> values;
  std::vector<EntryFlag> flags;
  std::vector<std::string> notes;  // regime warnings, kernel choice, ...

  std::size_t size() const noexcept { return values.size(); }
  bool flagged(std::size_t m) const { return flags[m] != EntryFlag::none; }

  /// Sum of the finite values.
  double total() const noexcept;
  std::size_t count(EntryFlag flag) const noexcept;
};

/// Photon numbers with the wrong parity relative to n carry exactly zero
/// probability. Equals 1 + cos((m - n) pi) without rounding.
constexpr double parity_factor(unsigned m, unsigned n) noexcept {
  return (m + n) % 2 == 0 ? 2.0 : 0.0;
}

/// ceil((2n+1) e^{2|r|} / 2) + 50: the classical support plus a tail.
unsigned default_m_max(unsigned n, double r);

}  // namespace sqz
