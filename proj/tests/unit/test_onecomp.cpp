#include <gtest/gtest.h>

#include <cmath>

#include "tcnet/onecomp.hpp"
#include "tcnet/words.hpp"

using namespace tcnet;
using namespace tcnet::onecomp;

TEST(DoubleFactorial, SmallValues) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(1), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(8), 384);
}

TEST(DoubleFactorial, RejectsBelowMinusOne) { EXPECT_THROW(double_factorial(-2), DomainError); }

TEST(PhyloTrees, KnownCounts) {
  EXPECT_EQ(count_phylo_trees(1), 1);
  EXPECT_EQ(count_phylo_trees(4), 15);
  EXPECT_EQ(count_phylo_trees(8), 135135);
  EXPECT_THROW(count_phylo_trees(0), DomainError);
}

TEST(Otc, HandValues) {
  EXPECT_EQ(count_otc({2, 2, 1}), 2);
  EXPECT_EQ(count_otc({2, 3, 1}), 18);
  EXPECT_EQ(count_otc_direct({2, 3, 1}), 18);
  EXPECT_EQ(count_otc_direct({3, 2, 1}), 2);
  EXPECT_EQ(count_otc({3, 2, 1}), 2);
  EXPECT_EQ(count_otc_direct({2, 5, 0}), 105);
}

TEST(Otc, NoReticulationsGivesTrees) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(count_otc({d, n, 0}), count_phylo_trees(n));
  }
}

TEST(Otc, EveryTwoLeafNetworkIsOneComponent) {
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(count_otc({d, 2, 1}), words::count_tc_words({d, 2, 1}));
}

TEST(Otc, Totals) {
  EXPECT_EQ(count_otc_total(2, 1), 1);
  EXPECT_EQ(count_otc_total(2, 2), 3);
  EXPECT_EQ(count_otc_total(3, 2), 3);
}

TEST(Otc, RejectsInvalidParams) {
  EXPECT_THROW(count_otc({1, 3, 0}), DomainError);
  EXPECT_THROW(count_otc({2, 0, 0}), DomainError);
  EXPECT_THROW(count_otc({2, 3, 3}), DomainError);
  EXPECT_THROW(count_otc({2, 3, -1}), DomainError);
  EXPECT_THROW(count_otc_direct({2, 3, 3}), DomainError);
}

TEST(Otc, LenientRangeGivesZero) {
  EXPECT_EQ(count_otc({2, 3, 3}, KRange::lenient), 0);
  EXPECT_EQ(count_otc_direct({2, 3, -1}, KRange::lenient), 0);
  EXPECT_THROW(count_otc({1, 3, 5}, KRange::lenient), DomainError);
}

TEST(Otc, TwoFormulasAgree) {
  for (int d = 2; d <= 8; ++d) {
    for (int n = 1; n <= 40; ++n) {
      for (int k = 0; k < n; ++k) ASSERT_EQ(count_otc({d, n, k}), count_otc_direct({d, n, k})) << d << n << k;
    }
  }
}

TEST(Otc, ProofRecurrence) {
  // OTC(n,k) k = n binom(2n+(d-2)k-2, d) OTC(n-1,k-1)
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 25; ++n) {
      for (int k = 1; k < n; ++k) {
        const long dd = d;
        ASSERT_EQ(count_otc({d, n, k}) * k,
                  n * binomial(2L * n + (dd - 2) * k - 2, d) * count_otc({d, n - 1, k - 1}));
      }
    }
  }
}

TEST(Otc, IncreasingInKForDThree) {
  for (int n = 2; n <= 30; ++n) {
    for (int k = 0; k + 1 < n; ++k) EXPECT_LT(count_otc({3, n, k}), count_otc({3, n, k + 1})) << n << " " << k;
  }
}

TEST(Otc, UnimodalForDTwoWithPeakNearExpectedPlace) {
  for (int n : {25, 100}) {
    int argmax = 0;
    for (int k = 1; k < n; ++k) {
      if (count_otc({2, n, k}) > count_otc({2, n, argmax})) argmax = k;
    }
    for (int k = 0; k + 1 <= argmax; ++k) EXPECT_LT(count_otc({2, n, k}), count_otc({2, n, k + 1}));
    for (int k = argmax; k + 1 < n; ++k) EXPECT_GT(count_otc({2, n, k}), count_otc({2, n, k + 1}));
    EXPECT_NEAR(argmax, n - std::sqrt(n + 1.0), 1.0) << n;
  }
}

TEST(NodeCensus, Examples) {
  EXPECT_EQ(node_census({3, 5, 2}), (NodeCensus{8, 16, 2}));
  EXPECT_EQ(node_census({2, 1, 0}), (NodeCensus{0, 2, 0}));
  EXPECT_EQ(node_census({4, 6, 5}), (NodeCensus{20, 32, 0}));
  EXPECT_THROW(node_census({2, 2, 2}), DomainError);
}

TEST(Arith, ExactDivisionAndConversion) {
  EXPECT_EQ(exact_div(12, 4), 3);
  EXPECT_THROW(exact_div(13, 4), ConsistencyError);
  EXPECT_THROW(to_integer(fraction(1, 2)), ConsistencyError);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
}

TEST(Arith, LogRealDecimalForm) {
  const LogReal x{std::log(12345.0)};
  EXPECT_EQ(x.exponent10(), 4);
  EXPECT_NEAR(x.mantissa10(), 1.2345, 1e-12);
  EXPECT_NEAR(log_of(factorial(1000)), std::lgamma(1001.0), 1e-9);
}
