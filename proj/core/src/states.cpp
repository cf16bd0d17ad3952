#include "sqz/states.hpp"

#include <cmath>
#include <numbers>

#include "sqz/special_fn.hpp"

namespace sqz {

double psi_position(const SqueezedNumberState& state, double x) {
  if (state.r == 0) return hermite_function(state.n, x);
  return std::exp(state.r / 2) * hermite_function(state.n, std::exp(state.r) * x);
}

double psi_momentum(const SqueezedNumberState& state, double p) {
  if (state.r == 0) return hermite_function(state.n, p);
  return std::exp(-state.r / 2) * hermite_function(state.n, std::exp(-state.r) * p);
}

double wigner(const SqueezedNumberState& state, double x, double p) {
  const double u = std::exp(2 * state.r) * x * x + std::exp(-2 * state.r) * p * p;
  const double sign = state.n % 2 == 0 ? 1.0 : -1.0;
  // e^{-u} L_n(2u) = laguerre_function(n, 2u), bounded by 1
  return sign / std::numbers::pi * laguerre_function(state.n, 2 * u);
}

namespace {

// Beyond u = 2n + 1 + 40 sqrt(n + 1) + 40 the envelope e^{-u} L_n(2u) is
// below 1e-17 of its peak.
double scaled_extent(unsigned n) {
  const double nn = n;
  return std::sqrt(2 * nn + 1 + 40 * std::sqrt(nn + 1) + 40);
}

}  // namespace

double momentum_extent(const SqueezedNumberState& state) {
  return std::exp(state.r) * scaled_extent(state.n);
}

double position_extent(const SqueezedNumberState& state) {
  return std::exp(-state.r) * scaled_extent(state.n);
}

double wigner_position_marginal(const SqueezedNumberState& state, double x, double tol) {
  const double extent = momentum_extent(state);
  // Even in p: integrate the half line and double.
  auto f = [&](double p) { return wigner(state, x, p); };
  return 2 * integrate_adaptive(f, 0.0, extent, tol / 2).value;
}

double wigner_momentum_marginal(const SqueezedNumberState& state, double p, double tol) {
  const double extent = position_extent(state);
  auto f = [&](double x) { return wigner(state, x, p); };
  return 2 * integrate_adaptive(f, 0.0, extent, tol / 2).value;
}

}  // namespace sqz
