#include "sqz/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqz/error.hpp"

namespace sqz {

namespace {

constexpr double clamp_floor = 1e-300;

unsigned default_order(unsigned degree) { return degree + 40; }

void check_degree(unsigned degree, unsigned cap, const char* where) {
  if (degree > cap) {
    throw Error(ErrorCode::quadrature_order,
                std::string(where) + ": m + n = " + std::to_string(degree) +
                    " exceeds the quadrature cap " + std::to_string(cap));
  }
}

void check_r(double r, const char* where) {
  if (!std::isfinite(r)) throw Error(ErrorCode::invalid_argument, std::string(where) + ": r must be finite");
}

Distribution make_distribution(unsigned n, double r, Method method, const std::vector<extended>& amps) {
  Distribution d;
  d.n = n;
  d.r = r;
  d.method = method;
  d.values.resize(amps.size());
  d.flags.assign(amps.size(), EntryFlag::none);
  for (std::size_t m = 0; m < amps.size(); ++m) {
    const extended p = amps[m] * amps[m];
    if (p != 0 && p < clamp_floor) {
      d.values[m] = 0;
      d.flags[m] = EntryFlag::clamped;
    } else {
      d.values[m] = static_cast<double>(p);
    }
  }
  return d;
}

}  // namespace

extended exact_amplitude(unsigned m, unsigned n, double r, const ExactOptions& options) {
  check_r(r, "exact_amplitude");
  check_degree(m + n, options.max_degree, "exact_amplitude");
  if (options.parity_shortcut && parity_factor(m, n) == 0) return 0;
  if (r == 0) return m == n ? 1 : 0;  // S(0) is the identity

  const unsigned order = options.order != 0 ? options.order : default_order(m + n);
  const auto rule = cached_gauss_hermite_rule(order);

  // f(x) = h_m(x) e^{r/2} h_n(e^r x) = poly(x) exp(-a x^2), a = (1 + e^{2r}) / 2;
  // substitute x = y / sqrt(a) so the weight becomes exp(-y^2).
  const extended stretch = std::exp(extended(r));
  const extended a = (1 + stretch * stretch) / 2;
  const extended inv_sqrt_a = 1 / std::sqrt(a);
  const extended jacobian = std::sqrt(stretch);

  extended sum = 0;
  for (std::size_t i = 0; i < rule->order(); ++i) {
    const extended x = rule->nodes[i] * inv_sqrt_a;
    const extended f = hermite_function<extended>(m, x) * jacobian *
                       hermite_function<extended>(n, stretch * x);
    sum += rule->scaled_weights[i] * f;
  }
  return sum * inv_sqrt_a;
}

AmplitudeTable recurrence_table(unsigned m_max, unsigned n_max, double r, double residual_tol) {
  check_r(r, "recurrence_table");
  // One extra row and column feed the residual check.
  AmplitudeTable w(m_max + 1, n_max + 1);
  const extended c = std::cosh(extended(r));
  const extended s = std::sinh(extended(r));
  const extended t = std::tanh(extended(r));

  for (unsigned k = 0; k <= n_max + 1; ++k) {
    if (k == 0) {
      w(0, 0) = 1 / std::sqrt(c);
    } else if (k >= 2) {
      w(0, k) = t * std::sqrt(extended(k - 1) / k) * w(0, k - 2);
    }
    for (unsigned m = 0; m <= m_max; ++m) {
      extended v = 0;
      if (k > 0) v += std::sqrt(extended(k)) * w(m, k - 1) / c;
      if (m > 0) v -= t * std::sqrt(extended(m)) * w(m - 1, k);
      w(m + 1, k) = v / std::sqrt(extended(m + 1));
    }
  }

  AmplitudeTable out(m_max, n_max);
  for (unsigned m = 0; m <= m_max; ++m) {
    for (unsigned k = 0; k <= n_max; ++k) {
      const extended value = w(m, k);
      if (!std::isfinite(value)) {
        throw Error(ErrorCode::recurrence_instability, "recurrence_table: non-finite amplitude");
      }
      const extended left = m > 0 ? std::sqrt(extended(m)) * w(m - 1, k) : 0;
      const extended right = c * std::sqrt(extended(k + 1)) * w(m, k + 1) -
                             (k > 0 ? s * std::sqrt(extended(k)) * w(m, k - 1) : 0);
      const extended scale = std::sqrt(extended(m)) + c * std::sqrt(extended(k + 1)) +
                             std::abs(s) * std::sqrt(extended(k));
      if (std::abs(left - right) > residual_tol * scale) {
        throw Error(ErrorCode::recurrence_instability,
                    "recurrence_table: identity residual " +
                        std::to_string(static_cast<double>(std::abs(left - right) / scale)) +
                        " at (m=" + std::to_string(m) + ", n=" + std::to_string(k) +
                        "); fall back to quadrature");
      }
      out(m, k) = value;
    }
  }
  return out;
}

extended exact_amplitude_recurrence(unsigned m, unsigned n, double r) {
  return recurrence_table(m, n, r)(m, n);
}

Distribution exact_distribution(unsigned n, double r, unsigned m_max, unsigned max_degree) {
  check_r(r, "exact_distribution");
  check_degree(m_max + n, max_degree, "exact_distribution");
  if (r == 0) {
    std::vector<extended> amps(std::size_t(m_max) + 1, 0);
    if (n <= m_max) amps[n] = 1;
    Distribution d = make_distribution(n, r, Method::exact_quadrature, amps);
    d.notes.emplace_back("r = 0: identity, no quadrature");
    return d;
  }

  const auto rule = cached_gauss_hermite_rule(default_order(m_max + n));
  const extended stretch = std::exp(extended(r));
  const extended a = (1 + stretch * stretch) / 2;
  const extended inv_sqrt_a = 1 / std::sqrt(a);
  const extended jacobian = std::sqrt(stretch);

  std::vector<extended> amps(std::size_t(m_max) + 1, 0);
  std::vector<extended> fock(std::size_t(m_max) + 1);
  for (std::size_t i = 0; i < rule->order(); ++i) {
    const extended x = rule->nodes[i] * inv_sqrt_a;
    const extended g = rule->scaled_weights[i] * jacobian * hermite_function<extended>(n, stretch * x);
    if (g == 0) continue;
    hermite_functions<extended>(x, fock);
    for (unsigned m = n % 2; m <= m_max; m += 2) amps[m] += g * fock[m];
  }
  for (auto& v : amps) v *= inv_sqrt_a;

  Distribution d = make_distribution(n, r, Method::exact_quadrature, amps);
  d.notes.emplace_back("gauss-hermite order " + std::to_string(rule->order()));
  return d;
}

Distribution exact_recurrence_distribution(unsigned n, double r, unsigned m_max) {
  const AmplitudeTable table = recurrence_table(m_max, n, r);
  std::vector<extended> amps(std::size_t(m_max) + 1);
  for (unsigned m = 0; m <= m_max; ++m) amps[m] = table(m, n);
  return make_distribution(n, r, Method::exact_recurrence, amps);
}

}  // namespace sqz
