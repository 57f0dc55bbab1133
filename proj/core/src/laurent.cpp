#include "tcnet/laurent.hpp"

#include <sstream>

namespace tcnet::laurent {

LaurentPoly LaurentPoly::monomial(int e, const Ratio& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(int e, const Ratio& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Ratio LaurentPoly::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Ratio(0) : it->second;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e - 1, c * e);
  return r;
}

Ratio LaurentPoly::at_one() const {
  Ratio s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (e != 0) os << "*X^" << e;
  }
  return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Ratio& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly f_laurent(int d) {
  if (d < 0) throw DomainError("f_d needs d >= 0");
  LaurentPoly f = LaurentPoly::monomial(0, fraction(1, 2)) + LaurentPoly::monomial(1, fraction(-1, 2));
  const LaurentPoly shift = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(-1, 1);
  for (int j = 1; j <= d; ++j) f = shift * f.derivative() + f * Ratio(j - 2);
  return f;
}

Ratio z_coefficient_series(int e, int n) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  // binom(e/2, n) (-4)^n
  Ratio r = 1;
  const Ratio half_e = fraction(e, 2);
  for (int i = 0; i < n; ++i) {
    r *= (half_e - i) * fraction(-4, i + 1);
  }
  return r;
}

Ratio z_coefficient_of_power(int e, int n) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  if (e >= 0) return z_coefficient_series(e, n);
  const long m = -e;
  if (m % 2 == 1) {
    const long h = (m - 1) / 2;
    Ratio r = fraction(binomial(n + h, h) * binomial(2L * n + m - 1, n + h), binomial(m - 1, h));
    return r;
  }
  const long h = (m - 2) / 2;
  return Ratio(power(Count(4), static_cast<unsigned long>(n)) * binomial(n + h, h));
}

Ratio z_coefficient(const LaurentPoly& poly, int n) {
  Ratio s = 0;
  for (const auto& [e, c] : poly.terms()) s += c * z_coefficient_of_power(e, n);
  return s;
}

}  // namespace tcnet::laurent
