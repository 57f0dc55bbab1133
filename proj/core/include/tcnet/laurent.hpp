#pragma once

#include <map>
#include <string>

#include "tcnet/arith.hpp"

// Laurent polynomials in X = sqrt(1 - 4z) with exact rational coefficients.
namespace tcnet::laurent {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// c * X^e
  static LaurentPoly monomial(int e, const Ratio& c);

  /// Coefficient of X^e (zero if absent).
  [[nodiscard]] Ratio coefficient(int e) const;
  /// Nonzero coefficients keyed by exponent.
  [[nodiscard]] const std::map<int, Ratio>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// d/dX
  [[nodiscard]] LaurentPoly derivative() const;
  /// Value at X = 1, which is z = 0.
  [[nodiscard]] Ratio at_one() const;
  [[nodiscard]] std::string str() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Ratio& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Ratio& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int e, const Ratio& c);
  std::map<int, Ratio> terms_;
};

/// f_0 = 1/2 - X/2, f_d = (X - 1/X) f_{d-1}' + (d-2) f_{d-1}.
LaurentPoly f_laurent(int d);

/// [z^n] X^e. Negative exponents use the closed binomial forms (one for odd
/// and one for even -e); nonnegative ones the series of (1-4z)^(e/2).
Ratio z_coefficient_of_power(int e, int n);

/// [z^n] of every exponent through the generalized binomial series only.
/// Slower; kept as an independent check of z_coefficient_of_power.
Ratio z_coefficient_series(int e, int n);

/// [z^n] poly.
Ratio z_coefficient(const LaurentPoly& poly, int n);

}  // namespace tcnet::laurent
