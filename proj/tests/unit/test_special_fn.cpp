#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "sqz/error.hpp"
#include "sqz/special_fn.hpp"

namespace {

using namespace sqz;
constexpr double pi = std::numbers::pi;

TEST(HermiteFunction, GroundStateAtOrigin) {
  EXPECT_NEAR(hermite_function(0u, 0.0), std::pow(pi, -0.25), 1e-15);
}

TEST(HermiteFunction, OddOrderVanishesAtOrigin) {
  EXPECT_EQ(hermite_function(1u, 0.0), 0.0);
  EXPECT_EQ(hermite_function(7u, 0.0), 0.0);
}

TEST(HermiteFunction, MatchesExplicitSecondOrder) {
  const double x = 1.3;
  const double direct = (4 * x * x - 2) * std::exp(-x * x / 2) / std::sqrt(8 * std::sqrt(pi));
  EXPECT_NEAR(hermite_function(2u, x), direct, 1e-15);
  // mpmath, 40 digits
  EXPECT_NEAR(hermite_function(2u, x), 0.54299477907426906628, 1e-15);
}

TEST(HermiteFunction, SequenceMatchesSingleEvaluation) {
  std::vector<double> seq(60);
  hermite_functions(2.7, std::span<double>(seq));
  for (unsigned k = 0; k < seq.size(); ++k) {
    EXPECT_NEAR(seq[k], hermite_function(k, 2.7), 1e-14) << "k=" << k;
  }
}

TEST(HermiteFunction, HighOrderStaysFinite) {
  for (double x : {0.3, 30.0, 63.0, 90.0}) {
    const double v = hermite_function(2000u, x);
    EXPECT_TRUE(std::isfinite(v)) << "x=" << x;
    EXPECT_LT(std::abs(v), 1.0);
  }
  // Far outside the turning point the function underflows to zero.
  EXPECT_EQ(hermite_function(10u, 60.0), 0.0);
}

TEST(HermiteFunction, OrthonormalUnderGaussHermite) {
  const auto rule = gauss_hermite_rule(80);
  for (unsigned m : {0u, 3u, 10u, 31u}) {
    for (unsigned n : {0u, 3u, 10u, 31u}) {
      extended sum = 0;
      for (std::size_t i = 0; i < rule.order(); ++i) {
        const extended x = rule.nodes[i];
        sum += rule.scaled_weights[i] * hermite_function<extended>(m, x) *
               hermite_function<extended>(n, x);
      }
      EXPECT_NEAR(static_cast<double>(sum), m == n ? 1.0 : 0.0, 1e-15) << m << "," << n;
    }
  }
}

TEST(Laguerre, LowOrders) {
  EXPECT_EQ(laguerre(0, 12.5), 1.0);
  EXPECT_EQ(laguerre(1, 2.0), -1.0);
}

TEST(Laguerre, FifthOrderExpansion) {
  const double x = 3.7;
  const double expansion = 1 - 5 * x + 5 * x * x - 5 * x * x * x / 3 + 5 * std::pow(x, 4) / 24 -
                           std::pow(x, 5) / 120;
  EXPECT_NEAR(laguerre(5, x), expansion, 1e-14);
  EXPECT_NEAR(laguerre(5, x), -0.20530891666666666667, 1e-14);
}

TEST(Laguerre, FunctionCarriesEnvelope) {
  for (unsigned n : {0u, 4u, 17u}) {
    for (double x : {0.0, 1.5, 20.0}) {
      EXPECT_NEAR(laguerre_function(n, x), std::exp(-x / 2) * laguerre(n, x), 1e-12);
    }
  }
  EXPECT_TRUE(std::isfinite(laguerre_function(3000, 4000.0)));
}

TEST(GaussHermite, OrderOne) {
  const auto rule = gauss_hermite_rule(1);
  ASSERT_EQ(rule.order(), 1u);
  EXPECT_EQ(rule.nodes[0], 0.0L);
  EXPECT_NEAR(static_cast<double>(rule.weights[0]), std::sqrt(pi), 1e-15);
}

TEST(GaussHermite, OrderTwo) {
  const auto rule = gauss_hermite_rule(2);
  EXPECT_NEAR(static_cast<double>(rule.nodes[0]), -1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(rule.nodes[1]), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(rule.weights[0]), std::sqrt(pi) / 2, 1e-15);
  EXPECT_NEAR(static_cast<double>(rule.weights[1]), std::sqrt(pi) / 2, 1e-15);
}

TEST(GaussHermite, FourthMomentOrderThree) {
  const auto rule = gauss_hermite_rule(3);
  extended sum = 0;
  for (std::size_t i = 0; i < 3; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], 4);
  EXPECT_NEAR(static_cast<double>(sum), 3 * std::sqrt(pi) / 4, 1e-15);
}

TEST(GaussHermite, WeightsSumToRootPiAtHighOrder) {
  for (unsigned order : {10u, 200u, 1000u}) {
    const auto rule = gauss_hermite_rule(order);
    extended sum = 0;
    for (auto w : rule.weights) sum += w;
    EXPECT_NEAR(static_cast<double>(sum), std::sqrt(pi), 1e-14) << order;
    for (std::size_t i = 0; i < order; ++i) {
      EXPECT_EQ(rule.nodes[i], -rule.nodes[order - 1 - i]);
    }
  }
}

TEST(GaussHermite, RejectsBadOrder) {
  EXPECT_THROW(gauss_hermite_rule(0), Error);
  EXPECT_THROW(gauss_hermite_rule(max_gauss_hermite_order + 1), Error);
}

TEST(GaussHermite, CacheReturnsSharedRule) {
  auto a = cached_gauss_hermite_rule(57);
  auto b = cached_gauss_hermite_rule(57);
  EXPECT_EQ(a.get(), b.get());
}

TEST(IntegrateAdaptive, SimpleIntegrals) {
  EXPECT_NEAR(integrate_adaptive([](double x) { return x; }, 0, 1, 1e-12).value, 0.5, 1e-14);
  EXPECT_NEAR(integrate_adaptive([](double x) { return x * x * x; }, -1, 1, 1e-12).value, 0.0,
              1e-15);
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::sin(x); }, 0, pi, 1e-12).value, 2.0,
              1e-13);
}

TEST(IntegrateAdaptive, EndpointSingularity) {
  const auto res = integrate_adaptive([](double x) { return std::sqrt(1 - x * x); }, -1, 1, 1e-11);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.value, pi / 2, 1e-10);
}

TEST(IntegrateAdaptive, RejectsBadArguments) {
  auto f = [](double x) { return x; };
  EXPECT_THROW(integrate_adaptive(f, 1, 0, 1e-8), Error);
  EXPECT_THROW(integrate_adaptive(f, 0, 1, 0), Error);
}

TEST(IntegrateAdaptive, ReportsExhaustedBudget) {
  auto f = [](double x) { return std::sin(1 / x); };
  AdaptiveOptions opts;
  opts.max_intervals = 20;
  opts.throw_on_failure = false;
  const auto res = integrate_adaptive(f, 1e-4, 1, 1e-12, opts);
  EXPECT_FALSE(res.converged);

  opts.throw_on_failure = true;
  try {
    integrate_adaptive(f, 1e-4, 1, 1e-12, opts);
    FAIL() << "expected no_convergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_convergence);
  }
}

}  // namespace
