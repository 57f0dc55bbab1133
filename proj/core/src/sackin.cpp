#include "tcnet/sackin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tcnet/asymptotics.hpp"
#include "tcnet/onecomp.hpp"

namespace tcnet::sackin {
namespace {

// (2L)!! - (2L-1)!!: path length summed over phylogenetic trees with L leaves.
Count tree_path_length(long leaves) {
  return double_factorial(2 * leaves) - double_factorial(2 * leaves - 1);
}

}  // namespace

PathLengthTotal path_length_total(const Params& p) {
  validate(p);
  const long d = p.d, n = p.n, k = p.k;
  const Count num = factorial(2 * n + (d - 2) * k);
  const Count den = power(factorial(d), static_cast<unsigned long>(k)) * factorial(2 * n - 2 * k);
  return {exact_div(num, den) * tree_path_length(n - k)};
}

PathLengthTotal path_length_total_recursive(const Params& p) {
  validate(p);
  const long d = p.d;
  Count acc = tree_path_length(p.n - p.k);
  // climb from (n-k, 0) to (n, k) one reticulation at a time
  for (long j = 1; j <= p.k; ++j) {
    const long n = p.n - p.k + j;
    acc *= binomial(2 * n + (d - 2) * j, d);
  }
  return {acc};
}

Count unary_binary_path_length(int leaves, int unary_nodes) {
  if (leaves < 1) throw DomainError("unary-binary trees need at least one leaf");
  if (unary_nodes < 0) throw DomainError("unary node count must be >= 0");
  return tree_path_length(leaves) * binomial(2L * leaves + unary_nodes, unary_nodes);
}

Ratio expected_path_length(int d, int n) {
  validate_dn(d, n);
  if (n < 2) throw DomainError("expected path length needs n >= 2, got " + std::to_string(n));
  Count weighted = 0;
  for (int k = 0; k <= n - 1; ++k) {
    weighted += binomial(n, k) * path_length_total({d, n, k}).value;
  }
  Ratio r = fraction(weighted, onecomp::count_otc_total(d, n));
  return r;
}

double normalized_expected_path_length(int d, int n) {
  const double e = to_double(expected_path_length(d, n));
  const double nn = n;
  double reference = 0.0;
  if (d == 2) {
    reference = 2.0 * std::sqrt(std::numbers::pi) * std::pow(nn, 1.75);
  } else if (d == 3) {
    const double c = 9.0 * (std::cosh(2.0) - asymp::bessel_I(0, 2.0)) / (2.0 * asymp::bessel_I(1, 2.0));
    reference = c * nn * nn;
  } else {
    reference = d * d / 2.0 * nn * nn;
  }
  return e / reference;
}

}  // namespace tcnet::sackin
