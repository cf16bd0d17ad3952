#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sqz/special_fn.hpp"
#include "sqz/states.hpp"

namespace {

using namespace sqz;
constexpr double pi = std::numbers::pi;

TEST(PsiPosition, VacuumAtOrigin) {
  EXPECT_NEAR(psi_position({0, 0.0}, 0.0), std::pow(pi, -0.25), 1e-15);
}

TEST(PsiPosition, ScalingRatio) {
  for (double x : {-0.4, 0.05, 0.2, 0.31}) {
    const double squeezed = psi_position({3, 1.5}, x);
    const double plain = psi_position({3, 0.0}, std::exp(1.5) * x);
    EXPECT_NEAR(squeezed / plain, std::exp(0.75), 1e-13) << "x=" << x;
  }
}

TEST(PsiPosition, FrozenValue) {
  // mpmath, 40 digits
  EXPECT_NEAR(psi_position({5, 2.0}, 0.1), 0.78162675873531310235, 1e-14);
}

TEST(PsiPosition, ZeroSqueezingIsHermiteFunction) {
  for (double x : {-2.0, 0.0, 0.7, 3.3}) {
    EXPECT_EQ(psi_position({6, 0.0}, x), hermite_function(6u, x));
  }
}

TEST(PsiPosition, Parity) {
  for (unsigned n : {0u, 1u, 4u, 9u}) {
    for (double x : {0.1, 0.9, 2.2}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      EXPECT_EQ(psi_position({n, 0.8}, -x), sign * psi_position({n, 0.8}, x));
    }
  }
}

TEST(PsiMomentum, VacuumAtOrigin) {
  EXPECT_NEAR(psi_momentum({0, 0.0}, 0.0), std::pow(pi, -0.25), 1e-15);
}

TEST(PsiMomentum, DensityIsEven) {
  for (double p : {0.3, 1.7, 4.0}) {
    const double a = psi_momentum({5, 2.0}, p);
    const double b = psi_momentum({5, 2.0}, -p);
    EXPECT_EQ(a * a, b * b);
  }
}

TEST(PsiMomentum, FrozenValue) {
  EXPECT_NEAR(psi_momentum({5, 2.0}, std::sqrt(11.0)), 0.1611795458571452701, 1e-15);
}

TEST(Wigner, VacuumPeak) { EXPECT_NEAR(wigner({0, 0.0}, 0, 0), 1 / pi, 1e-15); }

TEST(Wigner, FirstExcitedAtOrigin) {
  for (double r : {0.0, 0.5, 2.0, -1.0}) EXPECT_NEAR(wigner({1, r}, 0, 0), -1 / pi, 1e-15);
}

TEST(Wigner, BoundedByInversePi) {
  for (unsigned n : {0u, 3u, 12u}) {
    for (double x = -4; x <= 4; x += 0.37) {
      for (double p = -4; p <= 4; p += 0.41) {
        EXPECT_LE(std::abs(wigner({n, 0.6}, x, p)), 1 / pi + 1e-15);
      }
    }
  }
}

TEST(Wigner, PositionMarginal) {
  const SqueezedNumberState s{5, 1.0};
  for (double x : {-0.8, -0.2, 0.0, 0.15, 0.5}) {
    const double psi = psi_position(s, x);
    EXPECT_NEAR(wigner_position_marginal(s, x), psi * psi, 1e-8) << "x=" << x;
  }
}

TEST(Wigner, MomentumMarginal) {
  const SqueezedNumberState s{4, 2.0};
  for (double p : {-9.0, -1.0, 0.0, 3.0, 14.0}) {
    const double psi = psi_momentum(s, p);
    EXPECT_NEAR(wigner_momentum_marginal(s, p), psi * psi, 1e-8) << "p=" << p;
  }
}

}  // namespace
