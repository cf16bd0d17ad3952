#pragma once

// Exact wavefunctions and Wigner function of squeezed number states
// |n, r> = S(r)|n> with zero squeezing phase. The squeeze operator acts as
// the coordinate scaling x -> e^r x with Jacobian e^{r/2}.

#include <string_view>

namespace sqz {

struct SqueezedNumberState {
  unsigned n = 0;  // photon number of the unsqueezed Fock state
  double r = 0;    // squeezing parameter
};

/// Phase-space kernel used wherever a Wigner-Cohen distribution is needed.
inline constexpr std::string_view phase_space_kernel = "wigner";

/// psi(x) = e^{r/2} h_n(e^r x).
double psi_position(const SqueezedNumberState& state, double x);

/// psi_bar(p) = e^{-r/2} h_n(e^{-r} p). The global phase (-i)^n is dropped.
double psi_momentum(const SqueezedNumberState& state, double p);

/// W(x, p) = ((-1)^n / pi) e^{-u} L_n(2u),  u = e^{2r} x^2 + e^{-2r} p^2.
double wigner(const SqueezedNumberState& state, double x, double p);

/// Half-width in p (resp. x) beyond which the Wigner function and both
/// densities are below double precision resolution.
double momentum_extent(const SqueezedNumberState& state);
double position_extent(const SqueezedNumberState& state);

/// Numerical marginals of the Wigner function: integral over p at fixed x,
/// and over x at fixed p, to absolute tolerance `tol`.
double wigner_position_marginal(const SqueezedNumberState& state, double x, double tol = 1e-11);
double wigner_momentum_marginal(const SqueezedNumberState& state, double p, double tol = 1e-11);

}  // namespace sqz
