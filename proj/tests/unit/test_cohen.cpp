#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "sqz/cohen.hpp"
#include "sqz/compare.hpp"
#include "sqz/exact.hpp"

namespace {

using namespace sqz;

bool has_note(const Distribution& d, const std::string& needle) {
  return std::any_of(d.notes.begin(), d.notes.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

TEST(RingArea, FrozenFockValue) {
  // mpmath 2-D quadrature of the Wigner function over the annulus
  EXPECT_NEAR(ring_area(5, 5, 0.0), 0.16073265944895550653, 1e-8);
}

TEST(RingArea, AnnuliPartitionTheMass) {
  const auto areas = ring_areas(5, 2.0, 2000, 1e-10);
  double sum = 0;
  for (double a : areas) sum += 2 * a;
  EXPECT_NEAR(sum, 1.0, 1e-6);
}

TEST(CohenClosedForm, OddParityIsZero) {
  for (unsigned m = 0; m < 60; m += 2) EXPECT_EQ(cohen_closed_form(m, 5, 2.0), 0.0);
}

TEST(CohenClosedForm, CloseToExactInStrongSqueezing) {
  const double w = static_cast<double>(exact_amplitude(5, 5, 2.0));
  EXPECT_NEAR(cohen_closed_form(5, 5, 2.0), w * w, 0.05 * w * w);
}

TEST(CohenClosedForm, RegimeViolationIsReported) {
  // Outside the strong-squeezing regime the closed form is not a probability
  // of 1 for the vacuum; the distribution carries a warning instead.
  EXPECT_GT(std::abs(cohen_closed_form(0, 0, 0.0) - 1.0), 0.1);
  EXPECT_TRUE(has_note(cohen_distribution(0, 0.0, 10), "regime"));
  EXPECT_FALSE(has_note(cohen_distribution(5, 2.0, 10), "regime"));
}

TEST(CohenDistribution, AgreesWithExact) {
  const auto exact = exact_distribution(5, 2.0, 400);
  const auto cohen = cohen_distribution(5, 2.0, 400);
  const auto report = compare(exact, cohen);
  EXPECT_LE(report.total_variation, 0.05);
  EXPECT_LE(report.rel_error_at_last_max, 0.1);
  for (std::size_t m = 0; m < cohen.size(); m += 2) EXPECT_EQ(cohen.values[m], 0.0);
}

TEST(WignerRingDistribution, AgreesWithExactAndKeepsParity) {
  const auto exact = exact_distribution(5, 2.0, 400);
  const auto ring = wigner_ring_distribution(5, 2.0, 400);
  EXPECT_LE(compare(exact, ring).total_variation, 0.05);
  for (std::size_t m = 0; m < ring.size(); m += 2) EXPECT_EQ(ring.values[m], 0.0);
  EXPECT_TRUE(has_note(ring, "wigner"));
}

}  // namespace
