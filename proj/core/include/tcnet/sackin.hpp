#pragma once

#include "tcnet/arith.hpp"
#include "tcnet/params.hpp"

namespace tcnet::sackin {

/// Total path length P summed over the class of one-component networks whose
/// reticulation leaves carry the k largest labels. P(N) is the sum of root
/// distances over all vertices of the top tree component of N.
struct PathLengthTotal {
  Count value;

  friend bool operator==(const PathLengthTotal& a, const PathLengthTotal& b) {
    return a.value == b.value;
  }
};

/// Closed form (2n+(d-2)k)! / ((d!)^k (2n-2k)!) * ((2n-2k)!! - (2n-2k-1)!!).
PathLengthTotal path_length_total(const Params& p);

/// Same quantity by iterating P(n,k) = binom(2n+(d-2)k, d) P(n-1,k-1) down to
/// the tree case P(n,0) = (2n)!! - (2n-1)!!.
PathLengthTotal path_length_total_recursive(const Params& p);

/// Total path length over unary-binary trees with L labeled leaves and K
/// unlabeled unary nodes: ((2L)!! - (2L-1)!!) binom(2L+K, K).
Count unary_binary_path_length(int leaves, int unary_nodes);

/// Expected top-component path length of a uniform one-component network
/// with n leaves, as an exact rational.
Ratio expected_path_length(int d, int n);

/// expected_path_length divided by its first-order growth: 2 sqrt(pi) n^(7/4)
/// for d = 2, 9 (cosh 2 - I_0(2)) / (2 I_1(2)) n^2 for d = 3, (d^2/2) n^2
/// otherwise. Tends to 1; convergence is slow, so callers watch the trend.
double normalized_expected_path_length(int d, int n);

}  // namespace tcnet::sackin
