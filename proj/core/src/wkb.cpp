#include "sqz/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "sqz/error.hpp"
#include "sqz/special_fn.hpp"

namespace sqz {

namespace {

constexpr double pi = std::numbers::pi;

void require_allowed(const WkbState& s, double x, const char* where) {
  if (!(std::abs(x) <= s.epsilon)) {
    throw Error(ErrorCode::forbidden_region,
                std::string(where) + ": |x| = " + std::to_string(std::abs(x)) +
                    " beyond turning point " + std::to_string(s.epsilon));
  }
}

// Integrals over (-eps, eps) are done in the angle x = eps cos(theta), where
// dx / p = e^{-2r} d(theta) removes the turning-point singularities. The
// action is written in theta directly; going through acos(x / eps) loses
// digits near theta = pi.
double angular_integral(const WkbState& s, double (*g)(double action)) {
  const double half_area = std::exp(2 * s.r) * 0.5 * s.epsilon * s.epsilon;
  auto f = [&](double theta) { return g(half_area * (theta - 0.5 * std::sin(2 * theta))); };
  return integrate_adaptive(f, 0.0, pi, 1e-11).value;
}

}  // namespace

WkbState make_wkb_state(unsigned n, double r) {
  if (!std::isfinite(r)) throw Error(ErrorCode::invalid_argument, "make_wkb_state: r must be finite");
  WkbState s;
  s.n = n;
  s.r = r;
  s.epsilon = std::exp(-r) * std::sqrt(2.0 * n + 1.0);
  s.period = 2 * pi * std::exp(-2 * r);
  return s;
}

double classical_momentum(const WkbState& s, double x) {
  require_allowed(s, x, "classical_momentum");
  return std::exp(2 * s.r) * std::sqrt((s.epsilon - x) * (s.epsilon + x));
}

double action(const WkbState& s, double x) {
  require_allowed(s, x, "action");
  const double eps = s.epsilon;
  const double t = std::clamp(x / eps, -1.0, 1.0);
  const double chord = std::sqrt((eps - x) * (eps + x));
  return std::exp(2 * s.r) * 0.5 * (eps * eps * std::acos(t) - x * chord);
}

double wkb_wavefunction(const WkbState& s, double x, const WkbOptions& options) {
  if (!(std::abs(x) < s.epsilon * (1 - options.guard))) {
    throw Error(ErrorCode::turning_point_region,
                "wkb_wavefunction: x = " + std::to_string(x) +
                    " inside the turning-point guard band or beyond eps = " +
                    std::to_string(s.epsilon));
  }
  double c = 1.0;
  if (options.normalization == WkbNormalization::l2_allowed_region) {
    c = std::sqrt(wkb_norm_squared(s.n));
  }
  const double p = classical_momentum(s, x);
  return 2 / (c * std::sqrt(s.period * p)) * std::cos(action(s, x) - pi / 4);
}

double normalization_correction(const WkbState& s) {
  const double integral = std::exp(-2 * s.r) * angular_integral(s, [](double a) {
    return std::sin(2 * a);
  });
  return 1 + integral / pi;
}

double wkb_norm_squared(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const WkbState s = make_wkb_state(n, 0.0);
  // (4 / T) * integral cos^2(S - pi/4) dx / p  with T = 2 pi
  const double value = 2 / pi * angular_integral(s, [](double a) {
    const double c = std::cos(a - pi / 4);
    return c * c;
  });
  std::lock_guard lock(mutex);
  cache.emplace(n, value);
  return value;
}

}  // namespace sqz
