#include "sqz/interference.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sqz/error.hpp"
#include "sqz/wkb.hpp"

namespace sqz {

namespace {

constexpr double pi = std::numbers::pi;

std::string label(unsigned m, unsigned n, double r) {
  return "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

void require_positive_r(double r, const char* where) {
  if (r == 0) {
    throw Error(ErrorCode::degenerate_squeezing,
                std::string(where) + ": r = 0, the bands coincide or are disjoint");
  }
  if (!(r > 0)) throw Error(ErrorCode::invalid_argument, std::string(where) + ": requires r > 0");
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

bool rings_intersect(unsigned m, unsigned n, double r) {
  const double inner = 2.0 * m + 1.0;
  const double outer = 2.0 * n + 1.0;
  const double stretch = std::exp(2 * std::abs(r));
  return outer / stretch <= inner && inner <= outer * stretch;
}

double crossing_point(unsigned m, unsigned n, double r) {
  require_positive_r(r, "crossing_point");
  if (!rings_intersect(m, n, r)) {
    throw Error(ErrorCode::no_crossing, "crossing_point: rings do not intersect " + label(m, n, r));
  }
  double numerator = std::exp(2 * r) * (2.0 * n + 1.0) - (2.0 * m + 1.0);
  // Exact edge cases (2m + 1 = (2n + 1) e^{2r}) leave only rounding noise.
  if (std::abs(numerator) <= 16 * std::numeric_limits<double>::epsilon() * (2.0 * m + 1.0)) {
    numerator = 0;
  }
  const double x_c = std::sqrt(std::max(0.0, numerator / std::expm1(4 * r)));
  // Rounding can push X_c a hair past a turning point at the window edges.
  const double eps_m = std::sqrt(2.0 * m + 1.0);
  const double eps_n = std::exp(-r) * std::sqrt(2.0 * n + 1.0);
  return std::min({x_c, eps_m, eps_n});
}

double overlap_area(unsigned m, unsigned n, double r) {
  const double x_c = crossing_point(m, n, r);
  const WkbState fock = make_wkb_state(m, 0.0);
  const WkbState squeezed = make_wkb_state(n, r);

  const double p_m = classical_momentum(fock, x_c);
  const double p_n = classical_momentum(squeezed, x_c);
  if (!(x_c > 0) || !(p_m > 0) || !(p_n > 0)) {
    throw Error(ErrorCode::tangency,
                "overlap_area: bands touch at a turning point or on the p axis " + label(m, n, r));
  }
  // p(x) = e^{2r} sqrt(eps^2 - x^2)  =>  p'(x) = -e^{4r} x / p(x)
  const double slope_m = -x_c / p_m;
  const double slope_n = -std::exp(4 * r) * x_c / p_n;
  const double slope_gap = std::abs(slope_m - slope_n);
  if (slope_gap < tangency_threshold) {
    throw Error(ErrorCode::tangency, "overlap_area: bands are tangent " + label(m, n, r));
  }
  return 2 * pi / (fock.period * squeezed.period * p_m * p_m) / slope_gap;
}

PhasePair interference_phases(unsigned m, unsigned n, double r) {
  const double x_c = crossing_point(m, n, r);
  const WkbState fock = make_wkb_state(m, 0.0);
  const WkbState squeezed = make_wkb_state(n, r);
  return {action(fock, x_c) - action(squeezed, x_c) - pi / 4,
          action(fock, -x_c) - action(squeezed, -x_c) + pi / 4};
}

OverlapGeometry overlap_geometry(unsigned m, unsigned n, double r) {
  require_positive_r(r, "overlap_geometry");
  OverlapGeometry g;
  g.m = m;
  g.n = n;
  g.r = r;
  g.allowed = rings_intersect(m, n, r);
  if (!g.allowed) return g;

  g.x_c = crossing_point(m, n, r);
  const PhasePair phases = interference_phases(m, n, r);
  g.phi = phases.phi;
  g.phi_prime = phases.phi_prime;
  try {
    g.area = overlap_area(m, n, r);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::tangency) throw;
    g.tangent = true;
    g.area = std::numeric_limits<double>::infinity();
  }
  return g;
}

Amplitude wkb_amplitude(unsigned m, unsigned n, double r) {
  if (r == 0) require_positive_r(r, "wkb_amplitude");
  if (!std::isfinite(r)) throw Error(ErrorCode::invalid_argument, "wkb_amplitude: r must be finite");

  const double parity = parity_factor(m, n);
  if (parity == 0) return {0.0, EntryFlag::none};

  const double magnitude_r = std::abs(r);
  const OverlapGeometry g = overlap_geometry(m, n, magnitude_r);
  if (!g.allowed) return {0.0, EntryFlag::none};
  if (g.tangent) return {std::numeric_limits<double>::quiet_NaN(), EntryFlag::tangency};

  double w = 2 * std::sqrt(g.area) * std::cos(g.phi) * parity;
  // <m|S(-r)|n> = i^{m-n} <m|S(r)|n>
  if (r < 0 && ((m > n ? m - n : n - m) / 2) % 2 == 1) w = -w;
  return {w, EntryFlag::none};
}

Distribution wkb_distribution(unsigned n, double r, unsigned m_max) {
  Distribution d;
  d.n = n;
  d.r = r;
  d.method = Method::wkb;
  d.values.resize(std::size_t(m_max) + 1);
  d.flags.assign(std::size_t(m_max) + 1, EntryFlag::none);
  for (unsigned m = 0; m <= m_max; ++m) {
    const Amplitude a = wkb_amplitude(m, n, r);
    if (a.flag != EntryFlag::none) {
      d.values[m] = a.value;
      d.flags[m] = a.flag;
      continue;
    }
    const double p = a.value * a.value;
    if (p > 1) {
      d.values[m] = std::numeric_limits<double>::quiet_NaN();
      d.flags[m] = EntryFlag::tangency;
    } else {
      d.values[m] = p;
    }
  }
  d.notes.emplace_back("amplitude set to zero outside the classical ring-intersection window");
  d.notes.emplace_back(
      "normalization: asymptotic, C_n = 1; diagnostics |C_n|^2 correction integral = " +
      shortest(normalization_correction(make_wkb_state(n, std::abs(r)))) +
      ", allowed-region L2 norm = " + shortest(wkb_norm_squared(n)));
  if (d.count(EntryFlag::tangency) > 0) {
    d.notes.emplace_back("tangency-flagged entries: stationary-phase area diverges");
  }
  return d;
}

}  // namespace sqz
