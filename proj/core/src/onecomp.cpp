#include "tcnet/onecomp.hpp"

#include <string>

namespace tcnet {

void validate_dn(int d, int n) {
  if (d < 2) throw DomainError("reticulation in-degree d must be >= 2, got " + std::to_string(d));
  if (n < 1) throw DomainError("leaf count n must be >= 1, got " + std::to_string(n));
}

void validate(const Params& p) {
  validate_dn(p.d, p.n);
  if (!k_in_range(p)) {
    throw DomainError("reticulation count must satisfy 0 <= k <= n-1, got " + to_string(p));
  }
}

bool k_in_range(const Params& p) {
  validate_dn(p.d, p.n);
  return p.k >= 0 && p.k <= p.n - 1;
}

std::string to_string(const Params& p) {
  return "(d=" + std::to_string(p.d) + ", n=" + std::to_string(p.n) + ", k=" +
         std::to_string(p.k) + ")";
}

namespace onecomp {

Count count_phylo_trees(int n) {
  if (n < 1) throw DomainError("phylogenetic trees need n >= 1, got " + std::to_string(n));
  return double_factorial(2L * n - 3);
}

Count count_otc(const Params& p, KRange range) {
  if (range == KRange::lenient && !k_in_range(p)) return 0;
  validate(p);
  const long d = p.d, n = p.n, k = p.k;
  const Count num = binomial(n, k) * factorial(2 * n + (d - 2) * k - 2);
  const Count den = power(factorial(d), static_cast<unsigned long>(k)) *
                    power(Count(2), static_cast<unsigned long>(n - k - 1)) * factorial(n - k - 1);
  return exact_div(num, den);
}

Count count_otc_direct(const Params& p, KRange range) {
  if (range == KRange::lenient && !k_in_range(p)) return 0;
  validate(p);
  const long d = p.d, n = p.n, k = p.k;
  const Count trees = count_phylo_trees(static_cast<int>(n - k));
  const Count placements = binomial(2 * (n - k) + d * k - 2, d * k);
  // multinomial (dk)! / (d!)^k: ways to split the dk unary nodes into k groups
  const Count groupings =
      exact_div(factorial(d * k), power(factorial(d), static_cast<unsigned long>(k)));
  return trees * placements * groupings * binomial(n, k);
}

Count count_otc_total(int d, int n) {
  validate_dn(d, n);
  Count total = 0;
  for (int k = 0; k <= n - 1; ++k) total += count_otc({d, n, k});
  return total;
}

NodeCensus node_census(const Params& p) {
  validate(p);
  const long d = p.d, n = p.n, k = p.k;
  return {n + (d - 1) * k - 1, 2 * n + d * k, n - k - 1};
}

}  // namespace onecomp
}  // namespace tcnet
