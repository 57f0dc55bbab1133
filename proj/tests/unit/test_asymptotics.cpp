#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "tcnet/asymptotics.hpp"
#include "tcnet/golden.hpp"
#include "tcnet/onecomp.hpp"
#include "tcnet/words.hpp"

using namespace tcnet;
using namespace tcnet::asymp;

TEST(Params, TableRows) {
  const auto p2 = params(2);
  EXPECT_EQ(p2.alpha, fraction(-5, 3));
  EXPECT_NEAR(p2.beta, 0.48, 1e-2);
  EXPECT_EQ(p2.gamma, 12);
  EXPECT_EQ(params(5).alpha, fraction(-35, 6));
  EXPECT_EQ(params(5).gamma, 216);
  EXPECT_EQ(params(8).gamma, fraction(531441, 140));
  EXPECT_EQ(params(4).alpha, fraction(-22, 5));
  EXPECT_EQ(params(4).gamma, fraction(250, 3));
  EXPECT_LT(p2.airy_a1, 0.0);
  EXPECT_THROW(params(1), DomainError);
}

TEST(Params, AllPrintedRows) {
  for (const auto& row : golden::table1()) {
    const auto p = params(row.d);
    EXPECT_EQ(p.alpha, Ratio(row.alpha));
    EXPECT_EQ(p.gamma, Ratio(row.gamma));
    EXPECT_NEAR(p.beta, row.beta_approx, 1e-2);
    EXPECT_EQ(p.gamma, 4 * words::lambda(row.d));
    EXPECT_NEAR(p.beta, std::pow((row.d - 1.0) / (row.d + 1.0), 2.0 / 3.0), 1e-12);
  }
}

TEST(Bessel, Values) {
  EXPECT_EQ(bessel_I(0, 0.0), 1.0);
  EXPECT_NEAR(bessel_I(1, 2.0), 1.5906368546373291, 1e-14);
  EXPECT_NEAR(9.0 * (std::cosh(2.0) - bessel_I(0, 2.0)) / (2.0 * bessel_I(1, 2.0)), 4.19438713, 1e-8);
  EXPECT_THROW(bessel_I(-1, 1.0), DomainError);
}

TEST(OtcAsymptotic, DTwoRatioTrend) {
  double prev = 0.0;
  for (int n : {50, 100, 150, 200}) {
    const double r = ratio(onecomp::count_otc_total(2, n), otc_asymptotic(2, n));
    EXPECT_GT(std::abs(1.0 - prev), std::abs(1.0 - r)) << n;
    prev = r;
  }
}

TEST(OtcAsymptotic, EstimatesTrackExactCounts) {
  for (int d = 3; d <= 5; ++d) {
    const double r = ratio(onecomp::count_otc_total(d, 200), otc_asymptotic(d, 200));
    EXPECT_NEAR(r, 1.0, 0.05) << d;
  }
  EXPECT_TRUE(std::isfinite(otc_asymptotic(4, 1000000).log));
  EXPECT_THROW(otc_asymptotic(2, 1), DomainError);
}

TEST(OtcAsymptotic, TopSliceDominates) {
  const Ratio r3 = fraction(onecomp::count_otc_total(3, 200), onecomp::count_otc({3, 200, 199}));
  EXPECT_NEAR(to_double(r3), bessel_I(1, 2.0), 1e-3);
  const Ratio r4 = fraction(onecomp::count_otc_total(4, 200), onecomp::count_otc({4, 200, 199}));
  EXPECT_NEAR(to_double(r4), 1.0, 1e-2);
}

TEST(Envelope, FiniteAndStretchedFactorBelowOne) {
  for (int d = 2; d <= 8; ++d) {
    const auto p = params(d);
    for (int n : {2, 10, 1000, 1000000}) {
      EXPECT_TRUE(std::isfinite(tc_envelope(d, n).log));
      EXPECT_LT(std::exp(3.0 * p.airy_a1 * p.beta * std::cbrt(static_cast<double>(n))), 1.0);
    }
  }
}

TEST(Envelope, RatioStaysInBand) {
  const auto r = tc_envelope_ratios(2, 10, 25);
  const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  EXPECT_GT(*lo, 0.0);
  EXPECT_LT(*hi / *lo, 3.0);
}

TEST(RatioSqrtE, Values) {
  Count row = 0;
  for (const auto& s : golden::tc_tables().front().rows.back().by_k) row += Count(s);
  EXPECT_EQ(ratio_sqrt_e(2, 8), fraction(row, Count("8485564550400")));
  for (int n = 2; n <= 20; ++n) {
    const double r = to_double(ratio_sqrt_e(2, n));
    EXPECT_GE(r, 1.0);
    EXPECT_LE(r, std::sqrt(std::exp(1.0)));
  }
  EXPECT_LT(std::abs(to_double(ratio_sqrt_e(3, 7)) - 1.0), std::abs(to_double(ratio_sqrt_e(3, 5)) - 1.0));
}
