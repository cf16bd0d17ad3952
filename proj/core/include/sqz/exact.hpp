#pragma once

// Exact photon statistics of |n, r> by two independent routes:
//
//  * quadrature: W_mn = <m|n,r> = integral h_m(x) e^{r/2} h_n(e^r x) dx with a
//    Gauss-Hermite rule matched to the combined Gaussian exp(-(1+e^{2r})x^2/2),
//    exact for the degree m+n polynomial part;
//  * recurrence: with U the scaling (U psi)(x) = e^{r/2} psi(e^r x),
//        a U = U (cosh r a - sinh r a+),   a+ U = U (cosh r a+ - sinh r a),
//    whose matrix elements give
//        W_00     = sech(r)^{1/2}
//        W_0,n+1  = tanh(r) sqrt(n/(n+1)) W_0,n-1
//        W_m+1,n  = (sqrt(n) sech(r) W_m,n-1 - tanh(r) sqrt(m) W_m-1,n) / sqrt(m+1)
//    The unused second identity, sqrt(m) W_m-1,n = cosh r sqrt(n+1) W_m,n+1 -
//    sinh r sqrt(n) W_m,n-1, is checked on every entry to detect precision loss.
//
// Both routes run in extended precision.

#include <cstddef>
#include <vector>

#include "sqz/distribution.hpp"
#include "sqz/special_fn.hpp"

namespace sqz {

struct ExactOptions {
  unsigned order = 0;          // 0: m + n + 40
  unsigned max_degree = 4000;  // cap on m + n
  bool parity_shortcut = true; // return exact zero for odd m - n without integrating
};

/// Throws Error{quadrature_order} when m + n exceeds the cap.
extended exact_amplitude(unsigned m, unsigned n, double r, const ExactOptions& options = {});

/// Dense table W[m][k] = <m|U(r)|k> for m <= m_max, k <= n_max.
class AmplitudeTable {
 public:
  AmplitudeTable(unsigned m_max, unsigned n_max)
      : rows_(m_max + 1), cols_(n_max + 1), data_(std::size_t(m_max + 1) * (n_max + 1), 0) {}

  extended operator()(unsigned m, unsigned n) const { return data_[std::size_t(m) * cols_ + n]; }
  extended& operator()(unsigned m, unsigned n) { return data_[std::size_t(m) * cols_ + n]; }
  unsigned m_max() const noexcept { return rows_ - 1; }
  unsigned n_max() const noexcept { return cols_ - 1; }

 private:
  unsigned rows_;
  unsigned cols_;
  std::vector<extended> data_;
};

/// Recurrence table. Throws Error{recurrence_instability} when the check
/// identity fails by more than `residual_tol` (absolute, amplitudes are <= 1);
/// callers should then fall back to exact_amplitude.
AmplitudeTable recurrence_table(unsigned m_max, unsigned n_max, double r,
                                double residual_tol = 1e-13);

extended exact_amplitude_recurrence(unsigned m, unsigned n, double r);

/// P_m = |W_mn|^2 for m <= m_max from one shared quadrature rule of order
/// m_max + n + 40. Values below 1e-300 are clamped to 0 and flagged.
Distribution exact_distribution(unsigned n, double r, unsigned m_max,
                                unsigned max_degree = 4000);

Distribution exact_recurrence_distribution(unsigned n, double r, unsigned m_max);

}  // namespace sqz
