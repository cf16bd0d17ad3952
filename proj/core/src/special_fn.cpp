#include "sqz/special_fn.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "sqz/error.hpp"

namespace sqz {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::no_convergence: return "no-convergence";
    case ErrorCode::forbidden_region: return "forbidden-region";
    case ErrorCode::turning_point_region: return "turning-point-region";
    case ErrorCode::degenerate_squeezing: return "degenerate-squeezing";
    case ErrorCode::no_crossing: return "no-crossing";
    case ErrorCode::tangency: return "tangency";
    case ErrorCode::quadrature_order: return "quadrature-order";
    case ErrorCode::recurrence_instability: return "recurrence-instability";
    case ErrorCode::incompatible_distribution: return "incompatible-distribution";
    case ErrorCode::range_too_short: return "range-too-short";
  }
  return "unknown";
}

double laguerre(unsigned n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_function(unsigned n, double x) {
  using Scale = detail::RecurrenceScale<double>;
  double log_scale = -x / 2;
  double prev = 0.0;
  double cur = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    const double next = k == 0 ? 1.0 - x : ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
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

namespace {

// h_{N-1}(x) and h_N(x) without the Gaussian envelope; the envelope
// exp(log_scale) is returned separately.
struct HermitePair {
  extended below;  // h_{N-1}
  extended top;    // h_N
  extended log_scale;
};

HermitePair hermite_pair(unsigned order, extended x) {
  using Scale = detail::RecurrenceScale<extended>;
  extended log_scale = -x * x / 2;
  extended prev = 0;
  extended cur = 1 / std::sqrt(std::sqrt(std::numbers::pi_v<extended>));
  for (unsigned k = 0; k < order; ++k) {
    const extended kk = k;
    const extended next = x * std::sqrt(2 / (kk + 1)) * cur - std::sqrt(kk / (kk + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > Scale::big) {
      cur *= Scale::small;
      prev *= Scale::small;
      log_scale += Scale::log_big;
    }
  }
  return {prev, cur, log_scale};
}

}  // namespace

QuadratureRule gauss_hermite_rule(unsigned order) {
  if (order < 1 || order > max_gauss_hermite_order) {
    throw Error(ErrorCode::invalid_argument,
                "gauss_hermite_rule: order " + std::to_string(order) + " outside [1, " +
                    std::to_string(max_gauss_hermite_order) + "]");
  }

  // Jacobi matrix of the monic Hermite recurrence: zero diagonal,
  // off-diagonal sqrt(k/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(std::max(1u, order) - 1);
  for (unsigned k = 1; k < order; ++k) sub[k - 1] = std::sqrt(0.5 * k);

  std::vector<double> guesses(order, 0.0);
  if (order > 1) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::no_convergence, "gauss_hermite_rule: tridiagonal eigensolver failed");
    }
    for (unsigned i = 0; i < order; ++i) guesses[i] = solver.eigenvalues()[i];
  }

  QuadratureRule rule;
  rule.kind = QuadratureKind::gauss_hermite;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.scaled_weights.resize(order);

  const extended node_tol = 1e-15L;
  const extended root_order = std::sqrt(extended(2) * order);

  // Nodes are symmetric; polish the nonnegative half and mirror.
  for (unsigned i = order / 2; i < order; ++i) {
    extended x = (order % 2 == 1 && i == order / 2) ? 0 : extended(guesses[i]);
    bool converged = (order % 2 == 1 && i == order / 2);
    for (int iter = 0; iter < 100 && !converged; ++iter) {
      const HermitePair h = hermite_pair(order, x);
      // h_N' = sqrt(2N) h_{N-1} - x h_N; the envelope cancels in the ratio.
      const extended dx = h.top / (root_order * h.below - x * h.top);
      x -= dx;
      if (std::abs(dx) <= node_tol * std::max<extended>(1, std::abs(x))) converged = true;
    }
    if (!converged || !std::isfinite(x)) {
      throw Error(ErrorCode::no_convergence,
                  "gauss_hermite_rule: Newton iteration failed for node " + std::to_string(i) +
                      " of order " + std::to_string(order));
    }
    const HermitePair h = hermite_pair(order, x);
    // w_i exp(x_i^2) = 1 / (N h_{N-1}(x_i)^2)
    const extended scaled =
        std::exp(-2 * h.log_scale) / (extended(order) * h.below * h.below);
    rule.nodes[i] = x;
    rule.scaled_weights[i] = scaled;
    rule.weights[i] = scaled * std::exp(-x * x);
    const unsigned mirror = order - 1 - i;
    rule.nodes[mirror] = -x;
    rule.scaled_weights[mirror] = scaled;
    rule.weights[mirror] = rule.weights[i];
  }

  for (unsigned i = 1; i < order; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw Error(ErrorCode::no_convergence,
                  "gauss_hermite_rule: Newton iteration converged to a duplicate node at order " +
                      std::to_string(order));
    }
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> cached_gauss_hermite_rule(unsigned order) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const QuadratureRule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_hermite_rule(order));
  std::lock_guard lock(mutex);
  return cache.try_emplace(order, std::move(rule)).first->second;
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct LocalEstimate {
  double value;
  double error;
  double magnitude;  // integral of |f|, sets the rounding floor
};

LocalEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kronrod_weights[7];
  double gauss = fc * gauss_weights[3];
  double magnitude = std::abs(fc) * kronrod_weights[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kronrod_nodes[j];
    const double lo = f(center - dx);
    const double hi = f(center + dx);
    kronrod += kronrod_weights[j] * (lo + hi);
    magnitude += kronrod_weights[j] * (std::abs(lo) + std::abs(hi));
    if (j % 2 == 1) gauss += gauss_weights[j / 2] * (lo + hi);
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half), magnitude * std::abs(half)};
}

}  // namespace

IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double tol, const AdaptiveOptions& options) {
  if (!(a < b)) {
    throw Error(ErrorCode::invalid_argument, "integrate_adaptive: requires a < b");
  }
  if (!(tol > 0)) {
    throw Error(ErrorCode::invalid_argument, "integrate_adaptive: tolerance must be positive");
  }

  const double length = b - a;
  extended total = 0;
  extended total_error = 0;
  extended rounding_floor = 0;
  std::size_t intervals = 0;
  bool budget_exhausted = false;

  std::vector<std::pair<double, double>> stack;
  stack.emplace_back(a, b);
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const LocalEstimate est = gauss_kronrod_15(f, lo, hi);
    ++intervals;
    if (!std::isfinite(est.value)) {
      throw Error(ErrorCode::no_convergence, "integrate_adaptive: integrand is not finite");
    }

    const double share = tol * (hi - lo) / length;
    // Below this the Kronrod-Gauss difference is rounding noise.
    const double noise = 50 * std::numeric_limits<double>::epsilon() * est.magnitude;
    const double mid = 0.5 * (lo + hi);
    const bool unsplittable =
        !(mid > lo && mid < hi) ||
        (hi - lo) < 64 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));

    if (est.error <= share || est.error <= noise || unsplittable) {
      total += est.value;
      total_error += est.error;
      if (est.error > share) rounding_floor += est.error;
      continue;
    }
    if (intervals + stack.size() + 2 > options.max_intervals) {
      budget_exhausted = true;
      total += est.value;
      total_error += est.error;
      continue;
    }
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }

  IntegrationResult result;
  result.value = static_cast<double>(total);
  result.error = static_cast<double>(total_error);
  result.intervals = intervals;
  result.converged = !budget_exhausted && total_error <= tol + rounding_floor;
  if (!result.converged && options.throw_on_failure) {
    throw Error(ErrorCode::no_convergence,
                "integrate_adaptive: achieved error " + std::to_string(result.error) +
                    " above tolerance " + std::to_string(tol) + " after " +
                    std::to_string(intervals) + " intervals");
  }
  return result;
}

}  // namespace sqz
