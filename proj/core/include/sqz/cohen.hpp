#pragma once

// Photon statistics from the Wigner function integrated over the Fock-state
// rings Omega_m = { 2m <= x^2 + p^2 <= 2m + 2 }, and the high-squeezing
// closed form that follows when the x-integral is extended to the whole line
// and |psi_bar|^2 is taken constant across the ring:
//
//   P_mn ~ (1 + cos((m-n) pi))^2 (sqrt(2m+2) - sqrt(2m)) e^{-r} h_n(sqrt(2m+1) e^{-r})^2

#include <vector>

#include "sqz/distribution.hpp"

namespace sqz {

/// 1/2 of the Wigner mass on Omega_m, to absolute tolerance `tol`.
double ring_area(unsigned m, unsigned n, double r, double tol = 1e-8);

/// ring_area for m = 0 .. m_max.
std::vector<double> ring_areas(unsigned n, double r, unsigned m_max, double tol = 1e-8);

/// The closed form above, evaluated with normalized Hermite functions.
double cohen_closed_form(unsigned m, unsigned n, double r);

/// Closed-form distribution. Adds a regime note for r < 1.
Distribution cohen_distribution(unsigned n, double r, unsigned m_max);

/// P_m = (1 + cos((m-n) pi))^2 ring_area(m, n, r).
Distribution wigner_ring_distribution(unsigned n, double r, unsigned m_max, double tol = 1e-8);

}  // namespace sqz
