#pragma once

#include <map>
#include <string>

#include "tcnet/arith.hpp"

// Exact laws of the reticulation count of a uniformly random network, and the
// reference laws they approach.
namespace tcnet::dist {

struct Pmf {
  std::map<long, Ratio> mass;

  [[nodiscard]] Ratio at(long k) const;
  [[nodiscard]] Ratio total() const;
  /// P(X <= k)
  [[nodiscard]] Ratio cdf(long k) const;

  friend bool operator==(const Pmf&, const Pmf&) = default;
};

enum class Family { onecomp, general };

Family parse_family(const std::string& s);
std::string to_string(Family f);

struct DistCeilings {
  int onecomp_n_max = 200;
  int general_n_max = 25;
};

/// Law of the number of reticulations: OTC(n,k)/OTC_n or TC(n,k)/TC_n.
Pmf ret_pmf(Family family, int d, int n, DistCeilings ceilings = {});

/// Law of n-1-X.
Pmf complement(const Pmf& p, long n);

/// E((X - about)^r)
Ratio moment(const Pmf& p, int r, const Ratio& about = 0);

struct Law {
  enum class Kind { poisson, bessel, dirac };
  Kind kind = Kind::dirac;
  Ratio rate = 0;  ///< Poisson rate
  int order = 1;   ///< Bessel order v
  Ratio arg = 2;   ///< Bessel argument a
  long point = 0;  ///< Dirac location

  static Law poisson(const Ratio& rate);
  /// P(X = k) proportional to (a/2)^(2k+v) / (k! (k+v)!)
  static Law bessel(int order, const Ratio& arg);
  static Law dirac(long point);
};

/// Reference law on 0..truncation, renormalized. Throws DomainError when the
/// discarded tail could exceed 1e-15 of the mass.
Pmf reference_pmf(const Law& law, int truncation = 40);

/// Half the l1 distance over the union of supports.
double total_variation(const Pmf& p, const Pmf& q);

/// Standard normal CDF.
double normal_cdf(double x);

/// Largest gap between the CDF of (R_n - n + sqrt n) / (n/4)^(1/4) for d = 2
/// one-component networks and the standard normal CDF, taken on both sides of
/// every atom.
double normal_cdf_diagnostic(int n, DistCeilings ceilings = {});

/// E(n-1-T_n) for general networks; bounds the expected number of twigs.
Ratio twig_expectation_bound(int d, int n, DistCeilings ceilings = {});

}  // namespace tcnet::dist
