#pragma once

// Photon statistics of |n, r> from phase-space interference of WKB bands.
//
// The circular band of the Fock state |m> and the elliptic band of |n, r>
// cross at four points (+-X_c, +-p). Each crossing contributes sqrt(A_mn)
// times a phase factor, which collapses to
//
//     W_mn = 2 sqrt(A_mn) cos(phi_mn) (1 + cos((m - n) pi)).

#include <cstddef>

#include "sqz/distribution.hpp"

namespace sqz {

/// Tangency threshold on |dp_m/dx - dp_n/dx| at the crossing point.
inline constexpr double tangency_threshold = 1e-9;

struct OverlapGeometry {
  unsigned m = 0;
  unsigned n = 0;
  double r = 0;
  double x_c = 0;
  double area = 0;       // A_mn
  double phi = 0;        // phase at +X_c
  double phi_prime = 0;  // phase at -X_c
  bool allowed = false;  // the classical rings intersect
  bool tangent = false;  // allowed, but the stationary-phase area diverges
};

/// Ring-intersection condition (2n+1) e^{-2r} <= 2m+1 <= (2n+1) e^{2r}.
bool rings_intersect(unsigned m, unsigned n, double r);

/// X_c = sqrt((e^{2r}(2n+1) - (2m+1)) / (e^{4r} - 1)).
/// Throws Error{degenerate_squeezing} for r == 0, Error{invalid_argument}
/// for r < 0 and Error{no_crossing} when the rings do not intersect.
double crossing_point(unsigned m, unsigned n, double r);

/// A_mn = 2 pi / (T_m T_n^{(r)} p_m(X_c)^2 |p_m'(X_c) - p_n^{(r)}'(X_c)|).
/// Throws Error{tangency} when the bands touch instead of crossing.
double overlap_area(unsigned m, unsigned n, double r);

struct PhasePair {
  double phi;
  double phi_prime;
};

/// phi = S_m(X_c) - S_n^{(r)}(X_c) - pi/4,  phi' = S_m(-X_c) - S_n^{(r)}(-X_c) + pi/4.
PhasePair interference_phases(unsigned m, unsigned n, double r);

/// All of the above in one record; never throws for r > 0.
OverlapGeometry overlap_geometry(unsigned m, unsigned n, double r);

struct Amplitude {
  double value = 0;  // NaN when flagged
  EntryFlag flag = EntryFlag::none;
};

/// WKB amplitude W_mn. Exactly zero for odd m - n and outside the ring
/// intersection window; tangency is returned flagged. Negative r is mapped
/// to |r| with the (-1)^{(m-n)/2} sign of the quarter-turn rotation.
/// Throws Error{degenerate_squeezing} for r == 0.
Amplitude wkb_amplitude(unsigned m, unsigned n, double r);

/// P_m = |W_mn|^2 for m = 0 .. m_max. Values above 1 (the stationary-phase
/// area blowing up next to a tangency) are flagged as tangency too.
Distribution wkb_distribution(unsigned n, double r, unsigned m_max);

}  // namespace sqz
