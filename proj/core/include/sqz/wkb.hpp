#pragma once

// Semiclassical description of |n, r> as the n-th level of the oscillator
// H' = p^2 e^{-2r}/2 + x^2 e^{2r}/2.

namespace sqz {

struct WkbState {
  unsigned n = 0;
  double r = 0;
  double epsilon = 1;  // turning point e^{-r} sqrt(2n+1)
  double period = 0;   // 2 pi e^{-2r}
};

WkbState make_wkb_state(unsigned n, double r);

/// p(x) = e^{2r} sqrt(eps^2 - x^2). Throws Error{forbidden_region} for |x| > eps.
double classical_momentum(const WkbState& s, double x);

/// S(x) = integral of p from x to eps, in closed form
/// e^{2r} [eps^2 arccos(x/eps) - x sqrt(eps^2 - x^2)] / 2.
/// Throws Error{forbidden_region} for |x| > eps.
double action(const WkbState& s, double x);

enum class WkbNormalization {
  asymptotic,        // C_n = 1: the 2 (T p)^{-1/2} prefactor alone
  l2_allowed_region  // C_n^2 = integral of the C_n = 1 density over (-eps, eps)
};

struct WkbOptions {
  double guard = 1e-3;  // relative band eps*(1-guard) <= |x| excluded
  WkbNormalization normalization = WkbNormalization::asymptotic;
};

/// Phi(x) = (2 / C_n) (T p(x))^{-1/2} cos(S(x) - pi/4), defined only inside
/// the guard band. Throws Error{turning_point_region} otherwise.
double wkb_wavefunction(const WkbState& s, double x, const WkbOptions& options = {});

/// 1 + (1/pi) * integral over (-eps, eps) of sin(2 S(x)) / p(x) dx, with the
/// r-dependence of the integrand exactly as written (it carries e^{-2r}).
double normalization_correction(const WkbState& s);

/// Squared L2 norm of the C_n = 1 WKB wavefunction over the allowed region.
/// Independent of r by the scaling law, so it is a function of n only.
double wkb_norm_squared(unsigned n);

}  // namespace sqz
