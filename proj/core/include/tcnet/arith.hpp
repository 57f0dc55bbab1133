#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcnet {

/// Arbitrary-precision nonnegative count. Every enumeration result uses this.
using Count = mpz_class;

/// Exact rational (probability masses, expectations, normalized tables).
using Ratio = mpq_class;

/// A caller passed arguments outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree did not, or a division that must be exact
/// left a remainder.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Count factorial(long n);

/// Binomial coefficient with the combinatorial convention: zero whenever
/// k < 0, k > n or n < 0.
Count binomial(long n, long k);

/// Product m (m-2) (m-4) ... down to 1 or 2; empty product for m in {-1, 0}.
Count double_factorial(long m);

Count power(const Count& base, unsigned long exponent);

/// num/den in lowest terms. Two-argument Ratio construction skips that step
/// and GMP's rational routines expect reduced input, so build fractions here.
Ratio fraction(const Count& num, const Count& den);

/// num / den, throwing ConsistencyError when the remainder is nonzero.
Count exact_div(const Count& num, const Count& den);

/// Converts a rational known to be integral, throwing otherwise.
Count to_integer(const Ratio& r);

std::string to_string(const Count& c);

/// Natural logarithm of a positive count, valid far beyond double range.
double log_of(const Count& c);

double to_double(const Ratio& r);

/// A positive real carried as its natural logarithm so that values like
/// (n!)^d for large n stay representable.
struct LogReal {
  double log = 0.0;

  /// exp(log); +inf once the value leaves double range.
  [[nodiscard]] double value() const;
  /// Decimal exponent e with value = mantissa * 10^e and 1 <= mantissa < 10.
  [[nodiscard]] std::int64_t exponent10() const;
  [[nodiscard]] double mantissa10() const;
};

/// exp(log(a) - b.log): the ratio of an exact count to a log-space estimate.
double ratio(const Count& a, const LogReal& b);

}  // namespace tcnet
