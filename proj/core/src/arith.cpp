#include "tcnet/arith.hpp"

#include <cmath>
#include <numbers>

namespace tcnet {

Count factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  Count r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Count binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Count double_factorial(long m) {
  if (m < -1) throw DomainError("double factorial undefined for m = " + std::to_string(m));
  if (m <= 0) return 1;
  Count r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Count power(const Count& base, unsigned long exponent) {
  Count r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Ratio fraction(const Count& num, const Count& den) {
  if (den == 0) throw DomainError("fraction with zero denominator");
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

Count exact_div(const Count& num, const Count& den) {
  if (den == 0) throw ConsistencyError("division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw ConsistencyError("inexact division: " + num.get_str() + " / " + den.get_str());
  }
  Count q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Count to_integer(const Ratio& r) {
  Ratio c = r;
  c.canonicalize();
  if (c.get_den() != 1) throw ConsistencyError("expected an integer, got " + c.get_str());
  return c.get_num();
}

std::string to_string(const Count& c) { return c.get_str(); }

double log_of(const Count& c) {
  if (c <= 0) throw DomainError("log of nonpositive count");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

double to_double(const Ratio& r) { return r.get_d(); }

double LogReal::value() const { return std::exp(log); }

std::int64_t LogReal::exponent10() const {
  return static_cast<std::int64_t>(std::floor(log / std::numbers::ln10));
}

double LogReal::mantissa10() const {
  const double l10 = log / std::numbers::ln10;
  return std::pow(10.0, l10 - std::floor(l10));
}

double ratio(const Count& a, const LogReal& b) { return std::exp(log_of(a) - b.log); }

}  // namespace tcnet
