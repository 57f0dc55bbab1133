#include "tcnet/compgraph.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "tcnet/laurent.hpp"

namespace tcnet::compgraph {
namespace {

void check_ms(int d, int m, int s) {
  if (d < 2) throw DomainError("d must be >= 2, got " + std::to_string(d));
  if (m < 1) throw DomainError("component graphs need m >= 1, got " + std::to_string(m));
  if (s < 1 || s > std::max(m - 1, 1)) {
    throw DomainError("sink count must satisfy 1 <= s <= max(m-1,1), got m=" + std::to_string(m) +
                      ", s=" + std::to_string(s));
  }
}

// beta(m,s,t): ways to attach s new sinks, each picking a multiset of d
// parents among the m-s old nodes, so that all t old sinks get a child.
Count beta(int d, int m, int s, int t) {
  Count sum = 0;
  for (int l = 0; l <= t; ++l) {
    Count term = binomial(t, l) * power(binomial(m - s - l + d - 1, d), static_cast<unsigned long>(s));
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

// k[m][s] for all m' <= m
std::vector<std::vector<Count>> graph_count_table(int d, int m_max) {
  std::vector<std::vector<Count>> k(static_cast<std::size_t>(m_max) + 1);
  for (int m = 1; m <= m_max; ++m) k[m].assign(static_cast<std::size_t>(m) + 1, 0);
  k[1][1] = 1;
  for (int m = 2; m <= m_max; ++m) {
    for (int s = 1; s <= m - 1; ++s) {
      Count sum = 0;
      for (int t = 1; t <= m - s; ++t) {
        if (t > std::max(m - s - 1, 1)) continue;
        sum += beta(d, m, s, t) * k[m - s][t];
      }
      k[m][s] = binomial(m, s) * sum;
    }
  }
  return k;
}

}  // namespace

int ComponentGraph::out_degree(int u) const {
  int s = 0;
  for (int v = 0; v < node_count; ++v) s += edges(u, v);
  return s;
}

int ComponentGraph::in_degree(int v) const {
  int s = 0;
  for (int u = 0; u < node_count; ++u) s += edges(u, v);
  return s;
}

int ComponentGraph::sink_count() const {
  int s = 0;
  for (int u = 0; u < node_count; ++u) s += out_degree(u) == 0 ? 1 : 0;
  return s;
}

bool ComponentGraph::is_acyclic() const {
  // Kahn's algorithm
  std::vector<int> indeg(static_cast<std::size_t>(node_count));
  std::vector<int> ready;
  for (int v = 0; v < node_count; ++v) {
    for (int u = 0; u < node_count; ++u) indeg[v] += edges(u, v) > 0 ? 1 : 0;
    if (indeg[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v = 0; v < node_count; ++v) {
      if (edges(u, v) > 0 && --indeg[v] == 0) ready.push_back(v);
    }
  }
  return removed == node_count;
}

Count count_component_graphs(int d, int m, int s) {
  check_ms(d, m, s);
  return graph_count_table(d, m)[m][s];
}

Count count_component_graphs_total(int d, int m) {
  check_ms(d, m, 1);
  const auto k = graph_count_table(d, m);
  Count total = 0;
  for (int s = 1; s <= std::max(m - 1, 1); ++s) total += k[m][s];
  return total;
}

std::uint64_t enumerate_component_graphs(int d, int m,
                                         const std::function<void(const ComponentGraph&)>& visit,
                                         int ceiling) {
  check_ms(d, m, 1);
  if (m > ceiling) {
    throw DomainError("m=" + std::to_string(m) + " exceeds the enumeration ceiling " +
                      std::to_string(ceiling));
  }
  std::uint64_t visited = 0;
  ComponentGraph g;
  g.node_count = m;
  for (int root = 0; root < m; ++root) {
    g.root = root;
    g.multiplicity.assign(static_cast<std::size_t>(m) * m, 0);
    // node v receives its d parents as a nondecreasing sequence of node ids
    auto place = [&](auto&& self, int v, int left, int min_parent) -> void {
      if (v == m) {
        if (g.is_acyclic()) {
          ++visited;
          visit(g);
        }
        return;
      }
      if (v == root) {
        self(self, v + 1, d, 0);
        return;
      }
      if (left == 0) {
        self(self, v + 1, d, 0);
        return;
      }
      for (int u = min_parent; u < m; ++u) {
        if (u == v) continue;
        ++g.multiplicity[u * m + v];
        self(self, v, left - 1, u);
        --g.multiplicity[u * m + v];
      }
    };
    place(place, 0, d, 0);
  }
  return visited;
}

void for_each_set_partition(int n, int blocks,
                            const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1 || blocks < 1 || blocks > n) return;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto grow = [&](auto&& self, int pos, int used) -> void {
    if (n - pos < blocks - used) return;  // too few positions left to open the rest
    if (pos == n) {
      visit(rgs);
      return;
    }
    for (int b = 0; b <= std::min(used, blocks - 1); ++b) {
      rgs[pos] = b;
      self(self, pos + 1, b == used ? used + 1 : used);
    }
  };
  rgs[0] = 0;
  grow(grow, 1, 1);
}

Count count_tc_compgraph(const Params& p, CompgraphCeilings ceilings) {
  validate(p);
  if (p.k > ceilings.k_max || p.n > ceilings.n_max) {
    throw DomainError("component-graph method limited to k <= " + std::to_string(ceilings.k_max) +
                      " and n <= " + std::to_string(ceilings.n_max) + ", got " + to_string(p));
  }
  const int m = p.k + 1;

  // Graphs only enter through their out-degree vector and the product of
  // edge-multiplicity factorials, so group them by out-degrees.
  std::map<std::vector<int>, Ratio> weight;
  enumerate_component_graphs(
      p.d, m,
      [&](const ComponentGraph& g) {
        std::vector<int> out(static_cast<std::size_t>(m));
        Count denom = 1;
        for (int u = 0; u < m; ++u) {
          out[u] = g.out_degree(u);
          for (int v = 0; v < m; ++v) denom *= factorial(g.edges(u, v));
        }
        weight[out] += fraction(1, denom);
      },
      m);

  const int g_max = p.d * (m - 1);
  // factor[b][g] = (2b + g - 2)! / (b - 1)!
  std::vector<std::vector<Count>> factor(static_cast<std::size_t>(p.n) + 1,
                                         std::vector<Count>(static_cast<std::size_t>(g_max) + 1));
  for (int b = 1; b <= p.n; ++b) {
    for (int g = 0; g <= g_max; ++g) factor[b][g] = exact_div(factorial(2L * b + g - 2), factorial(b - 1));
  }

  Ratio total = 0;
  std::vector<int> sizes(static_cast<std::size_t>(m));
  for_each_set_partition(p.n, m, [&](const std::vector<int>& rgs) {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int b : rgs) ++sizes[b];
    for (const auto& [out, w] : weight) {
      Count prod = 1;
      for (int j = 0; j < m; ++j) prod *= factor[sizes[j]][out[j]];
      total += w * Ratio(prod);
    }
  });
  return exact_div(to_integer(total), power(Count(2), static_cast<unsigned long>(p.n - p.k - 1)));
}

Count count_tc_genfun_k1(int d, int n) {
  validate_dn(d, n);
  if (n < 2) throw DomainError("the k = 1 generating function needs n >= 2");
  using laurent::f_laurent;
  const Ratio coeff = laurent::z_coefficient(f_laurent(d) * f_laurent(0), n);
  Ratio r = fraction(factorial(n), factorial(d) * power(Count(2), static_cast<unsigned long>(n - 2))) * coeff;
  return to_integer(r);
}

Count count_tc_genfun_k2(int d, int n) {
  validate_dn(d, n);
  if (n < 3) throw DomainError("the k = 2 generating function needs n >= 3");
  using laurent::f_laurent;
  const auto f0 = f_laurent(0);
  Ratio sum = 0;
  for (int l = 0; l <= d; ++l) {
    const Ratio c = fraction(1, factorial(d - l) * factorial(l));
    sum += c * laurent::z_coefficient(f_laurent(2 * d - l) * f_laurent(l) * f0, n);
  }
  const Count nf = factorial(n);
  const Count dfac = factorial(d);
  Ratio r = fraction(nf, dfac * power(Count(2), static_cast<unsigned long>(n - 3))) * sum;
  r -= fraction(nf, dfac * dfac * power(Count(2), static_cast<unsigned long>(n - 2))) *
       laurent::z_coefficient(f_laurent(2 * d) * f0 * f0, n);
  return to_integer(r);
}

Count closed_form_k1(int d, int n) {
  validate_dn(d, n);
  if (n < 2) throw DomainError("closed form for k = 1 needs n >= 2");
  const long nn = n;
  if (d == 2) return nn * (double_factorial(2 * nn - 1) - double_factorial(2 * nn - 2));
  if (d == 3) {
    return to_integer(fraction(nn * (2 * nn + 1) * double_factorial(2 * nn - 1), 3)) -
           nn * nn * double_factorial(2 * nn - 2);
  }
  throw DomainError("closed form for k = 1 exists only for d = 2, 3");
}

Count closed_form_k2(int d, int n) {
  validate_dn(d, n);
  if (n < 3) throw DomainError("closed form for k = 2 needs n >= 3");
  const long nn = n;
  Ratio inner;
  if (d == 2) {
    inner = fraction(3 * nn + 2, 3) * Ratio(double_factorial(2 * nn - 1)) - Ratio(double_factorial(2 * nn));
  } else if (d == 3) {
    inner = fraction(70 * nn * nn + 244 * nn + 177, 315) * Ratio(double_factorial(2 * nn + 1)) -
            fraction(16 * nn + 13, 48) * Ratio(double_factorial(2 * nn + 2));
  } else {
    throw DomainError("closed form for k = 2 exists only for d = 2, 3");
  }
  return to_integer(Ratio(nn * (nn - 1)) * inner);
}

Count count_star(const Params& p) {
  validate(p);
  if (p.k < 1) throw DomainError("star counts need k >= 1");
  const long d = p.d, n = p.n, k = p.k;
  Ratio sum = 0;
  for (long j = 1; j <= n - k; ++j) {
    sum += fraction(factorial(2 * j + d * k - 2), factorial(j) * factorial(j - 1)) *
           fraction(factorial(2 * n - k - 2 * j - 1), factorial(n - k - j) * factorial(n - j));
  }
  const Ratio pre = fraction(factorial(n), power(factorial(d), static_cast<unsigned long>(k)) *
                                    power(Count(2), static_cast<unsigned long>(n - k - 1)) *
                                    factorial(k - 1));
  return to_integer(pre * sum);
}

LogReal asympt_tc_fixed_k(int d, int n, int k) {
  validate_dn(d, n);
  if (k < 0) throw DomainError("k must be >= 0");
  const double dk = static_cast<double>(d) * k;
  const double nn = n;
  return {(dk - 1.0) * std::numbers::ln2 - k * std::lgamma(d + 1.0) - std::lgamma(k + 1.0) -
          0.5 * std::log(std::numbers::pi) + std::lgamma(nn + 1.0) + nn * std::numbers::ln2 +
          (dk - 1.5) * std::log(nn)};
}

}  // namespace tcnet::compgraph
