#include "sqz/cohen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sqz/error.hpp"
#include "sqz/special_fn.hpp"
#include "sqz/states.hpp"

namespace sqz {

namespace {

void add_kernel_note(Distribution& d) {
  d.notes.emplace_back("phase-space kernel: " + std::string(phase_space_kernel));
}

}  // namespace

double ring_area(unsigned m, unsigned n, double r, double tol) {
  if (!std::isfinite(r)) throw Error(ErrorCode::invalid_argument, "ring_area: r must be finite");
  const SqueezedNumberState state{n, r};
  const double inner = std::sqrt(2.0 * m);
  const double outer = std::sqrt(2.0 * m + 2.0);

  // W is even in x and in p: ring_area = 1/2 * 4 * (first quadrant).
  const double inner_tol = tol / (4 * (outer - inner) * outer);
  auto radial = [&](double rho) {
    auto angular = [&](double theta) {
      return wigner(state, rho * std::cos(theta), rho * std::sin(theta));
    };
    return rho * integrate_adaptive(angular, 0.0, std::numbers::pi / 2, inner_tol).value;
  };
  return 2 * integrate_adaptive(radial, inner, outer, tol / 4).value;
}

std::vector<double> ring_areas(unsigned n, double r, unsigned m_max, double tol) {
  std::vector<double> out(std::size_t(m_max) + 1);
  for (unsigned m = 0; m <= m_max; ++m) out[m] = ring_area(m, n, r, tol);
  return out;
}

double cohen_closed_form(unsigned m, unsigned n, double r) {
  const double parity = parity_factor(m, n);
  if (parity == 0) return 0.0;
  // sqrt(2m+2) - sqrt(2m) without cancellation
  const double width = 2.0 / (std::sqrt(2.0 * m + 2.0) + std::sqrt(2.0 * m));
  const double h = hermite_function(n, std::sqrt(2.0 * m + 1.0) * std::exp(-r));
  return parity * parity * width * std::exp(-r) * h * h;
}

Distribution cohen_distribution(unsigned n, double r, unsigned m_max) {
  Distribution d;
  d.n = n;
  d.r = r;
  d.method = Method::cohen_closed_form;
  d.values.resize(std::size_t(m_max) + 1);
  d.flags.assign(std::size_t(m_max) + 1, EntryFlag::none);
  for (unsigned m = 0; m <= m_max; ++m) d.values[m] = cohen_closed_form(m, n, r);
  add_kernel_note(d);
  if (r < 1) {
    d.notes.emplace_back("regime warning: r < 1, the closed form assumes high squeezing");
  }
  return d;
}

Distribution wigner_ring_distribution(unsigned n, double r, unsigned m_max, double tol) {
  Distribution d;
  d.n = n;
  d.r = r;
  d.method = Method::wigner_ring;
  d.values.assign(std::size_t(m_max) + 1, 0.0);
  d.flags.assign(std::size_t(m_max) + 1, EntryFlag::none);
  for (unsigned m = n % 2; m <= m_max; m += 2) {
    const double parity = parity_factor(m, n);
    d.values[m] = parity * parity * ring_area(m, n, r, tol);
  }
  add_kernel_note(d);
  return d;
}

}  // namespace sqz
