#pragma once

#include "tcnet/arith.hpp"
#include "tcnet/params.hpp"

namespace tcnet::onecomp {

using tcnet::double_factorial;

/// Node counts of any d-combining tree-child network with n leaves and k
/// reticulations. They follow from the degree sums alone.
struct NodeCensus {
  long tree_nodes = 0;       ///< n + (d-1)k - 1
  long total_nodes = 0;      ///< 2n + dk, root and leaves included
  long free_tree_nodes = 0;  ///< n - k - 1, tree nodes without reticulation children

  friend bool operator==(const NodeCensus&, const NodeCensus&) = default;
};

/// Number of rooted binary phylogenetic trees on n labeled leaves, (2n-3)!!.
Count count_phylo_trees(int n);

/// One-component networks with the given parameters:
///   binom(n,k) (2n+(d-2)k-2)! / ((d!)^k 2^(n-k-1) (n-k-1)!).
Count count_otc(const Params& p, KRange range = KRange::strict);

/// The same count assembled step by step from its construction: a phylogenetic
/// tree on n-k leaves, dk unary nodes placed on its 2(n-k)-1 edges, the unary
/// nodes grouped d at a time into reticulations, and a choice of which k
/// labels hang below reticulations.
Count count_otc_direct(const Params& p, KRange range = KRange::strict);

/// Sum of count_otc over k = 0..n-1.
Count count_otc_total(int d, int n);

NodeCensus node_census(const Params& p);

}  // namespace tcnet::onecomp
