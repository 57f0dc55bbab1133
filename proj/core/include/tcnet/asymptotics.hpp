#pragma once

#include <vector>

#include "tcnet/arith.hpp"

// First-order asymptotic formulas and ratio diagnostics against exact counts.
// Everything large is evaluated in log space through lgamma.
namespace tcnet::asymp {

/// Largest (least negative) zero of the Airy function Ai.
inline constexpr double kAiryA1 = -2.338107410459767;

struct AsymptoticParams {
  Ratio alpha;  ///< -d(3d-1) / (2(d+1))
  double beta;  ///< ((d-1)/(d+1))^(2/3)
  Ratio gamma;  ///< 4 (d+1)^(d-1) / (d-1)!
  double airy_a1 = kAiryA1;
};

AsymptoticParams params(int d);

/// Modified Bessel function of the first kind by its power series, summed until
/// the relative size of the next term drops below 1e-17.
double bessel_I(int v, double a);

/// First-order estimate of the number of one-component networks with n leaves
/// (summed over k). The formula depends on whether d is 2, 3 or larger.
LogReal otc_asymptotic(int d, int n);

/// (n!)^d gamma^n exp(3 a1 beta n^(1/3)) n^alpha. Correct only up to a
/// bounded factor.
LogReal tc_envelope(int d, int n);

/// TC(n, n-1) / tc_envelope(d, n) for n = n_from..n_to, sharing one table.
std::vector<double> tc_envelope_ratios(int d, int n_from, int n_to);

/// TC_n / TC_{n,n-1} exactly. Lies in [1, sqrt(e)] and tends to sqrt(e) for
/// d = 2 and to 1 for d >= 3.
Ratio ratio_sqrt_e(int d, int n);

}  // namespace tcnet::asymp
