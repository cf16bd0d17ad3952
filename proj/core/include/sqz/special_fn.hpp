#pragma once

// Orthogonal-polynomial and quadrature primitives.
//
// Hermite and Laguerre *functions* (polynomial times Gaussian/exponential
// envelope) are evaluated by normalized three-term recurrences that carry
// the envelope as a separate logarithmic scale, so nothing overflows for
// n up to 1e4 and |x| up to 1e3; values that are genuinely tiny underflow
// to zero.

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

namespace sqz {

/// Extended precision used by the exact-overlap routes.
using extended = long double;

// ---------------------------------------------------------------------------
// Hermite functions h_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) exp(-x^2/2)

namespace detail {

// Rescaling keeps the recurrence state inside the representable range.
template <typename T>
struct RecurrenceScale {
  static constexpr T big = T(0x1p500);
  static constexpr T small = T(0x1p-500);
  static constexpr T log_big = T(500) * std::numbers::ln2_v<T>;
};

}  // namespace detail

/// Fills out[k] = h_k(x) for k = 0 .. out.size()-1.
template <typename T>
void hermite_functions(T x, std::span<T> out) {
  using Scale = detail::RecurrenceScale<T>;
  if (out.empty()) return;

  T log_scale = -x * x / 2;  // envelope kept out of the recurrence
  T factor = std::exp(log_scale);
  T prev = 0;
  T cur = T(1) / std::sqrt(std::sqrt(std::numbers::pi_v<T>));
  out[0] = cur * factor;

  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    const T kk = static_cast<T>(k);
    T next = x * std::sqrt(T(2) / (kk + 1)) * cur - std::sqrt(kk / (kk + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > Scale::big) {
      cur *= Scale::small;
      prev *= Scale::small;
      log_scale += Scale::log_big;
      factor = std::exp(log_scale);
    }
    out[k + 1] = cur * factor;
  }
}

/// Normalized Hermite function h_n(x).
template <typename T>
T hermite_function(unsigned n, T x) {
  using Scale = detail::RecurrenceScale<T>;
  T log_scale = -x * x / 2;
  T prev = 0;
  T cur = T(1) / std::sqrt(std::sqrt(std::numbers::pi_v<T>));
  for (unsigned k = 0; k < n; ++k) {
    const T kk = static_cast<T>(k);
    T next = x * std::sqrt(T(2) / (kk + 1)) * cur - std::sqrt(kk / (kk + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > Scale::big) {
      cur *= Scale::small;
      prev *= Scale::small;
      log_scale += Scale::log_big;
    }
  }
  return cur * std::exp(log_scale);
}

// ---------------------------------------------------------------------------
// Laguerre

/// Laguerre polynomial L_n(x) by the standard three-term recurrence.
double laguerre(unsigned n, double x);

/// exp(-x/2) L_n(x), bounded by 1 in magnitude for x >= 0.
double laguerre_function(unsigned n, double x);

// ---------------------------------------------------------------------------
// Quadrature

enum class QuadratureKind { gauss_hermite, adaptive_interval };

/// Nodes/weights for integrals against exp(-x^2).
///
/// `weights[i]` are the classical Gauss-Hermite weights; `scaled_weights[i]`
/// are weights[i] * exp(nodes[i]^2), which integrate a plain function f with
/// sum(scaled_weights[i] * f(nodes[i])) and never underflow. Stored in
/// extended precision: for orders in the thousands the outer weights are far
/// below the smallest double.
struct QuadratureRule {
  std::vector<extended> nodes;
  std::vector<extended> weights;
  std::vector<extended> scaled_weights;
  QuadratureKind kind = QuadratureKind::gauss_hermite;

  std::size_t order() const noexcept { return nodes.size(); }
};

inline constexpr unsigned max_gauss_hermite_order = 4100;

/// Gauss-Hermite rule of the given order: tridiagonal-eigenvalue initial
/// guesses polished by Newton iteration on h_order (node residual 1e-14).
/// Throws Error{no_convergence} if Newton fails, Error{invalid_argument}
/// outside 1 .. max_gauss_hermite_order.
QuadratureRule gauss_hermite_rule(unsigned order);

/// Process-wide immutable cache of gauss_hermite_rule results.
std::shared_ptr<const QuadratureRule> cached_gauss_hermite_rule(unsigned order);

struct AdaptiveOptions {
  std::size_t max_intervals = 100000;
  /// When false a budget overrun returns the best estimate with
  /// `converged == false` instead of throwing.
  bool throw_on_failure = true;
};

struct IntegrationResult {
  double value = 0;
  double error = 0;        // estimated absolute error
  std::size_t intervals = 0;
  bool converged = false;
};

/// Adaptive bisection with a 7/15-point Gauss-Kronrod pair. The absolute
/// tolerance is shared between subintervals in proportion to their length.
/// Intervals whose error estimate is at the rounding floor of the local rule
/// are accepted and counted towards the achieved error. Endpoints are never
/// evaluated, so integrable endpoint singularities work.
IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double tol, const AdaptiveOptions& options = {});

}  // namespace sqz
