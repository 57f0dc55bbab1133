#include <gtest/gtest.h>

#include <cmath>

#include "tcnet/asymptotics.hpp"
#include "tcnet/distributions.hpp"
#include "tcnet/golden.hpp"

using namespace tcnet;
using namespace tcnet::dist;

TEST(RetPmf, GeneralSmallRow) {
  const Pmf p = ret_pmf(Family::general, 2, 3);
  EXPECT_EQ(p.at(0), fraction(3, 66));
  EXPECT_EQ(p.at(1), fraction(21, 66));
  EXPECT_EQ(p.at(2), fraction(42, 66));
  EXPECT_EQ(p.total(), 1);
}

TEST(RetPmf, PointMassForOneLeaf) {
  for (auto fam : {Family::onecomp, Family::general}) {
    const Pmf p = ret_pmf(fam, 3, 1);
    EXPECT_EQ(p.mass.size(), 1u);
    EXPECT_EQ(p.at(0), 1);
  }
}

TEST(RetPmf, MassAtTopForDThree) {
  EXPECT_EQ(ret_pmf(Family::general, 3, 4).at(3), fraction(55320, 15 + 492 + 7908 + 55320));
}

TEST(RetPmf, SumsToOneAndCeilings) {
  for (int d = 2; d <= 5; ++d) {
    EXPECT_EQ(ret_pmf(Family::onecomp, d, 60).total(), 1);
    EXPECT_EQ(ret_pmf(Family::general, d, 12).total(), 1);
  }
  EXPECT_THROW(ret_pmf(Family::onecomp, 2, 201), DomainError);
  EXPECT_THROW(ret_pmf(Family::general, 2, 26), DomainError);
  EXPECT_NO_THROW(ret_pmf(Family::general, 2, 26, {200, 30}));
  EXPECT_THROW(parse_family("tree"), DomainError);
  EXPECT_EQ(parse_family("general"), Family::general);
}

TEST(Moment, Basics) {
  Pmf point;
  point.mass[4] = 1;
  EXPECT_EQ(moment(point, 1), 4);
  EXPECT_EQ(moment(point, 2, 4), 0);
  EXPECT_THROW(moment(point, 0), DomainError);
  const Pmf pois = reference_pmf(Law::poisson(fraction(1, 2)), 40);
  const Ratio mean = moment(pois, 1);
  EXPECT_NEAR(to_double(mean), 0.5, 1e-15);
  EXPECT_NEAR(to_double(moment(pois, 2, mean)), 0.5, 1e-15);
}

TEST(Moment, ComplementMeanFromTableRow) {
  const auto& row = golden::tc_tables().front().rows.back();  // d = 2, n = 8
  ASSERT_EQ(row.n, 8);
  Count num = 0, den = 0;
  for (int k = 0; k < 8; ++k) {
    num += Count(7 - k) * Count(row.by_k[k]);
    den += Count(row.by_k[k]);
  }
  const Ratio expected = fraction(num, den);
  EXPECT_EQ(moment(complement(ret_pmf(Family::general, 2, 8), 8), 1), expected);
  EXPECT_EQ(twig_expectation_bound(2, 8), expected);
}

TEST(Twigs, SmallForDThreeAndNearHalfForDTwo) {
  EXPECT_LT(to_double(twig_expectation_bound(3, 7)), 0.2);
  EXPECT_LT(twig_expectation_bound(3, 7), twig_expectation_bound(3, 5));
  const double e25 = to_double(twig_expectation_bound(2, 25));
  EXPECT_NEAR(e25, 0.5, 0.02);
  EXPECT_GT(e25, to_double(twig_expectation_bound(2, 6)));
}

TEST(ReferenceLaws, Masses) {
  EXPECT_EQ(reference_pmf(Law::dirac(0)).at(0), 1);
  // 1 / I_1(2) = 0.628679...
  EXPECT_NEAR(to_double(reference_pmf(Law::bessel(1, 2)).at(0)), 1.0 / asymp::bessel_I(1, 2.0), 1e-14);
  EXPECT_NEAR(to_double(reference_pmf(Law::bessel(1, 2)).at(0)), 0.628679, 1e-6);
  EXPECT_NEAR(to_double(reference_pmf(Law::poisson(fraction(1, 2))).at(0)), std::exp(-0.5), 1e-15);
  EXPECT_EQ(reference_pmf(Law::bessel(1, 2)).total(), 1);
}

TEST(ReferenceLaws, RejectsShortTruncationAndBadParameters) {
  EXPECT_THROW(reference_pmf(Law::poisson(fraction(1, 2)), 5), DomainError);
  EXPECT_THROW(Law::poisson(0), DomainError);
  EXPECT_THROW(Law::bessel(-1, 2), DomainError);
  EXPECT_THROW(reference_pmf(Law::dirac(0), -1), DomainError);
}

TEST(TotalVariation, Basics) {
  const Pmf a = reference_pmf(Law::dirac(0));
  const Pmf b = reference_pmf(Law::dirac(1));
  EXPECT_EQ(total_variation(a, a), 0.0);
  EXPECT_EQ(total_variation(a, b), 1.0);
  EXPECT_EQ(total_variation(b, a), 1.0);
}

TEST(TotalVariation, GeneralDTwoApproachesPoisson) {
  const Pmf pois = reference_pmf(Law::poisson(fraction(1, 2)));
  double prev = 1.0;
  for (int n : {6, 8, 10, 12}) {
    const double tv = total_variation(complement(ret_pmf(Family::general, 2, n), n), pois);
    EXPECT_LT(tv, prev) << n;
    prev = tv;
  }
}

TEST(TotalVariation, OneComponentDThreeApproachesBessel) {
  const Pmf bessel = reference_pmf(Law::bessel(1, 2));
  double prev = 1.0;
  for (int n : {50, 100, 150, 200}) {
    const double tv = total_variation(complement(ret_pmf(Family::onecomp, 3, n), n), bessel);
    EXPECT_LT(tv, prev) << n;
    prev = tv;
  }
}

TEST(Degenerate, MassAtTopGrowsForLargeD) {
  for (int d : {4, 5}) {
    Ratio prev = 0;
    for (int n : {50, 100, 150, 200}) {
      const Ratio top = ret_pmf(Family::onecomp, d, n).at(n - 1);
      EXPECT_GT(top, prev);
      prev = top;
    }
  }
}

TEST(Normal, GapShrinks) {
  const double g50 = normal_cdf_diagnostic(50);
  const double g100 = normal_cdf_diagnostic(100);
  const double g200 = normal_cdf_diagnostic(200);
  for (double g : {g50, g100, g200}) {
    EXPECT_GE(g, 0.0);
    EXPECT_LE(g, 1.0);
  }
  EXPECT_LT(g100, g50);
  EXPECT_LT(g200, g100);
  EXPECT_LT(g200, 0.15);
  EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-15);
  EXPECT_NEAR(normal_cdf(1.96), 0.9750021048517795, 1e-12);
}
