#pragma once

// Brute-force oracles shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "sqz/special_fn.hpp"
#include "sqz/wkb.hpp"

namespace sqz::oracle {

/// Area of the ring intersection in the quadrant x, p > 0, by counting grid
/// cell midpoints. Ring m is the unsqueezed band 2m <= x^2 + p^2 <= 2m + 2;
/// ring n is the squeezed band 2n <= e^{2r} x^2 + e^{-2r} p^2 <= 2n + 2.
inline double grid_intersection_area(unsigned m, unsigned n, double r, std::size_t cells = 4000) {
  const double outer_m = 2.0 * m + 2;
  const double x_hi = std::min(std::sqrt(outer_m), std::exp(-r) * std::sqrt(2.0 * n + 2));
  const double p_hi = std::min(std::sqrt(outer_m), std::exp(r) * std::sqrt(2.0 * n + 2));
  const double hx = x_hi / cells;
  const double hp = p_hi / cells;
  const double e2 = std::exp(2 * r);
  std::size_t count = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double x = (i + 0.5) * hx;
    for (std::size_t j = 0; j < cells; ++j) {
      const double p = (j + 0.5) * hp;
      const double ring_m = x * x + p * p;
      const double ring_n = e2 * x * x + p * p / e2;
      if (ring_m >= 2.0 * m && ring_m <= outer_m && ring_n >= 2.0 * n && ring_n <= 2.0 * n + 2) {
        ++count;
      }
    }
  }
  return count * hx * hp;
}

/// Overlap of the WKB wavefunctions Phi_m^{(0)} and Phi_n^{(r)} integrated
/// over the shared allowed interval, stopping short of the guard bands.
inline double wkb_overlap_integral(unsigned m, unsigned n, double r) {
  const auto plain = make_wkb_state(m, 0.0);
  const auto squeezed = make_wkb_state(n, r);
  const double guard = WkbOptions{}.guard;
  const double edge = std::min(plain.epsilon, squeezed.epsilon) * (1 - 1.01 * guard);
  auto f = [&](double x) { return wkb_wavefunction(plain, x) * wkb_wavefunction(squeezed, x); };
  return integrate_adaptive(f, -edge, edge, 1e-9).value;
}

}  // namespace sqz::oracle
