#pragma once

#include <string>

namespace tcnet {

/// Identifies a counting problem: reticulation in-degree d, leaf count n and
/// reticulation count k. The tree-child property forces 0 <= k <= n - 1.
struct Params {
  int d = 2;
  int n = 1;
  int k = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

/// How an operation treats a reticulation count outside 0..n-1.
enum class KRange {
  strict,   ///< reject with DomainError
  lenient,  ///< the count is zero
};

/// Throws DomainError unless d >= 2 and n >= 1.
void validate_dn(int d, int n);

/// Throws DomainError unless the triple satisfies every invariant.
void validate(const Params& p);

/// True when k lies in 0..n-1 (d and n are still validated).
bool k_in_range(const Params& p);

std::string to_string(const Params& p);

}  // namespace tcnet
