#pragma once

#include <functional>
#include <vector>

#include "tcnet/arith.hpp"
#include "tcnet/params.hpp"

// Tree-child counts through component graphs: each network splits into tree
// components, glued by reticulations, and the gluing pattern is a rooted DAG
// whose non-root nodes all have in-degree d.
namespace tcnet::compgraph {

/// Labeled rooted DAG on nodes 0..m-1 with edge multiplicities. Every
/// non-root node has in-degree d, the root has in-degree 0.
struct ComponentGraph {
  int node_count = 0;
  int root = 0;
  /// Row-major: multiplicity[u * node_count + v] edges from u to v.
  std::vector<int> multiplicity;

  [[nodiscard]] int edges(int u, int v) const { return multiplicity[u * node_count + v]; }
  [[nodiscard]] int out_degree(int u) const;
  [[nodiscard]] int in_degree(int v) const;
  /// Nodes without outgoing edges.
  [[nodiscard]] int sink_count() const;
  [[nodiscard]] bool is_acyclic() const;

  friend bool operator==(const ComponentGraph&, const ComponentGraph&) = default;
};

inline constexpr int kDefaultGraphCeiling = 4;
inline constexpr int kDefaultCompgraphKCeiling = 3;
inline constexpr int kDefaultCompgraphNCeiling = 8;

/// Number of component graphs on m labeled nodes with exactly s sinks, by the
/// sink-removal recurrence. k_{1,1} = 1.
Count count_component_graphs(int d, int m, int s);

/// Sum over s of count_component_graphs.
Count count_component_graphs_total(int d, int m);

/// Visits every component graph on m nodes once. Returns how many were visited.
std::uint64_t enumerate_component_graphs(int d, int m,
                                         const std::function<void(const ComponentGraph&)>& visit,
                                         int ceiling = kDefaultGraphCeiling);

/// Restricted growth strings of length n with exactly `blocks` distinct
/// values; block j holds the positions labeled j, so blocks come ranked by
/// their smallest element.
void for_each_set_partition(int n, int blocks, const std::function<void(const std::vector<int>&)>& visit);

struct CompgraphCeilings {
  int k_max = kDefaultCompgraphKCeiling;
  int n_max = kDefaultCompgraphNCeiling;
};

/// TC(n,k) as 2^-(n-k-1) times the sum over set partitions of the labels into
/// k+1 blocks and component graphs on those blocks of
///   prod_j (2 b_j + g_j - 2)! / ((b_j - 1)! prod_l g_{j,l}!),
/// with b_j the block size, g_j the out-degree and g_{j,l} edge multiplicities.
Count count_tc_compgraph(const Params& p, CompgraphCeilings ceilings = {});

/// TC(n,1) from the generating functions f_d f_0. Needs n >= 2.
Count count_tc_genfun_k1(int d, int n);

/// TC(n,2) from the generating functions. Needs n >= 3.
Count count_tc_genfun_k2(int d, int n);

/// Closed forms of TC(n,1) for d = 2, 3.
Count closed_form_k1(int d, int n);

/// Closed forms of TC(n,2) for d = 2, 3.
Count closed_form_k2(int d, int n);

/// Networks whose component graph is a star (every reticulation hangs
/// directly below the root component). Needs k >= 1.
Count count_star(const Params& p);

/// 2^(dk-1) / ((d!)^k k! sqrt(pi)) n! 2^n n^(dk-3/2), first-order TC(n,k)
/// for fixed k.
LogReal asympt_tc_fixed_k(int d, int n, int k);

}  // namespace tcnet::compgraph
