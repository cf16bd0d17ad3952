#include <gtest/gtest.h>

#include <cmath>

#include "sqz/error.hpp"
#include "sqz/exact.hpp"

namespace {

using namespace sqz;

TEST(ExactAmplitude, IdentityAtZeroSqueezing) {
  for (unsigned m = 0; m < 12; ++m) {
    for (unsigned n = 0; n < 12; ++n) {
      EXPECT_EQ(static_cast<double>(exact_amplitude(m, n, 0.0)), m == n ? 1.0 : 0.0);
    }
  }
}

TEST(ExactAmplitude, VacuumOverlapIsRootSech) {
  for (double r : {0.5, 1.0, 2.0}) {
    const double w = static_cast<double>(exact_amplitude(0, 0, r));
    EXPECT_NEAR(w * w, 1 / std::cosh(r), 1e-15) << "r=" << r;
  }
  EXPECT_NEAR(static_cast<double>(exact_amplitude(0, 0, 2.0)), 0.51556011175621382833, 1e-15);
}

TEST(ExactAmplitude, FrozenValues) {
  // mpmath, 40 digits
  EXPECT_NEAR(static_cast<double>(exact_amplitude(7, 5, 2.0)), -0.16294735141453784446, 1e-14);
  EXPECT_NEAR(static_cast<double>(exact_amplitude(55, 5, 2.0)), 0.10355089087910815781, 1e-14);
}

TEST(ExactAmplitude, OddParityWithoutShortcut) {
  ExactOptions opts;
  opts.parity_shortcut = false;
  for (unsigned m : {0u, 6u, 40u, 120u}) {
    EXPECT_EQ(static_cast<double>(exact_amplitude(m, 5, 2.0)), 0.0);
    EXPECT_LT(std::abs(static_cast<double>(exact_amplitude(m, 5, 2.0, opts))), 1e-13) << m;
  }
}

TEST(ExactAmplitude, StableUnderOrderDoubling) {
  for (unsigned m : {1u, 33u, 199u}) {
    const double base = static_cast<double>(exact_amplitude(m, 5, 2.0));
    ExactOptions opts;
    opts.order = 2 * (m + 5 + 40);
    const double doubled = static_cast<double>(exact_amplitude(m, 5, 2.0, opts));
    EXPECT_NEAR(base, doubled, 1e-14) << m;
  }
}

TEST(ExactAmplitude, AdjointAndRotationSymmetry) {
  for (unsigned m : {0u, 4u, 9u, 30u}) {
    for (unsigned n : {0u, 2u, 7u}) {
      const double w = std::abs(static_cast<double>(exact_amplitude(m, n, 1.3)));
      EXPECT_NEAR(w, std::abs(static_cast<double>(exact_amplitude(n, m, -1.3))), 1e-14);
      EXPECT_NEAR(w, std::abs(static_cast<double>(exact_amplitude(m, n, -1.3))), 1e-14);
    }
  }
}

TEST(ExactAmplitude, DegreeCap) {
  ExactOptions opts;
  opts.max_degree = 100;
  try {
    exact_amplitude(90, 20, 1.0, opts);
    FAIL() << "expected quadrature_order";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::quadrature_order);
  }
}

TEST(Recurrence, MatchesQuadrature) {
  for (double r : {0.5, 1.0, 2.0}) {
    const auto table = recurrence_table(20, 20, r);
    for (unsigned m = 0; m <= 20; ++m) {
      for (unsigned n = 0; n <= 20; ++n) {
        EXPECT_NEAR(static_cast<double>(table(m, n)),
                    static_cast<double>(exact_amplitude(m, n, r)), 1e-9)
            << m << "," << n << " r=" << r;
      }
    }
  }
}

TEST(Recurrence, IdentityAndVacuum) {
  const auto table = recurrence_table(6, 6, 0.0);
  for (unsigned m = 0; m <= 6; ++m) {
    for (unsigned n = 0; n <= 6; ++n) {
      EXPECT_EQ(static_cast<double>(table(m, n)), m == n ? 1.0 : 0.0);
    }
  }
  EXPECT_NEAR(static_cast<double>(exact_amplitude_recurrence(0, 0, 2.0)),
              std::sqrt(1 / std::cosh(2.0)), 1e-16);
}

TEST(ExactDistribution, IndicatorAtZeroSqueezing) {
  const auto d = exact_distribution(5, 0.0, 10);
  ASSERT_EQ(d.size(), 11u);
  for (std::size_t m = 0; m < d.size(); ++m) EXPECT_EQ(d.values[m], m == 5 ? 1.0 : 0.0);
}

TEST(ExactDistribution, Unitarity) {
  const auto d = exact_distribution(5, 2.0, 2000);
  EXPECT_GE(d.total(), 1 - 1e-6);
  EXPECT_LE(d.total(), 1 + 1e-12);
}

TEST(ExactDistribution, ValuesAreProbabilities) {
  const auto d = exact_distribution(5, 2.0, 400);
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (d.flagged(m)) continue;
    EXPECT_GE(d.values[m], 0.0);
    EXPECT_LE(d.values[m], 1.0);
    if (m % 2 == 0) {
      EXPECT_EQ(d.values[m], 0.0) << m;
    }
  }
}

TEST(ExactDistribution, AgreesWithRecurrenceDistribution) {
  const auto a = exact_distribution(7, 1.5, 300);
  const auto b = exact_recurrence_distribution(7, 1.5, 300);
  for (std::size_t m = 0; m < a.size(); ++m) {
    EXPECT_NEAR(a.values[m], b.values[m], 1e-12 * std::max(1e-3, a.values[m])) << m;
  }
}

TEST(ExactRecurrenceDistribution, ClampsDeepTailUnderflow) {
  const auto d = exact_recurrence_distribution(0, 0.05, 600);
  EXPECT_GT(d.count(EntryFlag::clamped), 0u);
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (d.flags[m] == EntryFlag::clamped) {
      EXPECT_EQ(d.values[m], 0.0);
    }
  }
}

}  // namespace
