#include "tcnet/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tcnet/params.hpp"
#include "tcnet/words.hpp"

namespace tcnet::asymp {
namespace {

double lfact(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

void check_n2(int d, int n) {
  validate_dn(d, n);
  if (n < 2) throw DomainError("asymptotic estimates need n >= 2, got " + std::to_string(n));
}

}  // namespace

AsymptoticParams params(int d) {
  if (d < 2) throw DomainError("d must be >= 2, got " + std::to_string(d));
  AsymptoticParams p;
  p.alpha = fraction(-d * (3 * d - 1), 2 * (d + 1));
  p.beta = std::cbrt(std::pow(static_cast<double>(d - 1) / (d + 1), 2.0));
  p.gamma = fraction(4 * power(Count(d + 1), static_cast<unsigned long>(d - 1)), factorial(d - 1));
  return p;
}

double bessel_I(int v, double a) {
  if (v < 0) throw DomainError("bessel_I needs order v >= 0");
  const double q = a * a / 4.0;
  double term = std::pow(a / 2.0, v) / std::tgamma(v + 1.0);
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= q / (static_cast<double>(k) * (k + v));
    sum += term;
    if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

LogReal otc_asymptotic(int d, int n) {
  check_n2(d, n);
  const double nn = n;
  const double ln = std::log(nn);
  using std::numbers::pi;
  if (d == 2) {
    return {-std::log(4.0 * pi * std::sqrt(std::numbers::e)) + 2.0 * lfact(n) +
            nn * std::numbers::ln2 + 2.0 * std::sqrt(nn) - 2.25 * ln};
  }
  if (d == 3) {
    return {std::log(bessel_I(1, 2.0) * std::sqrt(3.0) / (9.0 * pi)) + 3.0 * lfact(n) +
            nn * std::log(4.5) - 3.0 * ln};
  }
  const double dd = d;
  const double lead = lfact(d) - (dd - 0.5) * std::log(dd) - (dd - 1.0) / 2.0 * std::log(2.0 * pi);
  return {lead + dd * lfact(n) + nn * (dd * std::log(dd) - lfact(d)) + 1.5 * (1.0 - dd) * ln};
}

LogReal tc_envelope(int d, int n) {
  check_n2(d, n);
  const auto p = params(d);
  const double nn = n;
  return {d * lfact(n) + nn * std::log(to_double(p.gamma)) +
          3.0 * p.airy_a1 * p.beta * std::cbrt(nn) + to_double(p.alpha) * std::log(nn)};
}

std::vector<double> tc_envelope_ratios(int d, int n_from, int n_to) {
  check_n2(d, n_from);
  std::vector<double> out;
  if (n_to < n_from) return out;
  const words::TcTable tc(d, n_to);
  for (int n = n_from; n <= n_to; ++n) out.push_back(ratio(tc.at(n, n - 1), tc_envelope(d, n)));
  return out;
}

Ratio ratio_sqrt_e(int d, int n) {
  validate_dn(d, n);
  const words::TcTable tc(d, n);
  Ratio r = fraction(tc.total(n), tc.at(n, n - 1));
  return r;
}

}  // namespace tcnet::asymp
