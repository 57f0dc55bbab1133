#include "tcnet/verify.hpp"

#include <cmath>

#include "tcnet/arith.hpp"
#include "tcnet/asymptotics.hpp"
#include "tcnet/compgraph.hpp"
#include "tcnet/golden.hpp"
#include "tcnet/onecomp.hpp"
#include "tcnet/sackin.hpp"
#include "tcnet/words.hpp"

namespace tcnet::verify {
namespace {

// Collects mismatches for one check, keeping the first few for the detail.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++compared_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Check finish(std::string suite, std::string name) const {
    std::string detail = std::to_string(compared_ - failed_) + "/" + std::to_string(compared_) + " agree";
    if (failed_ > 0) detail += ", first failures: " + first_;
    return {std::move(suite), std::move(name), failed_ == 0 && compared_ > 0, detail};
  }

 private:
  long compared_ = 0;
  long failed_ = 0;
  std::string first_;
};

std::vector<int> d_range(const SuiteOptions& o, std::vector<int> fallback) {
  if (o.d) return {*o.d};
  return fallback;
}

std::string cell(int d, int n, int k) { return to_string(Params{d, n, k}); }

std::vector<Check> golden_tables(const SuiteOptions& o) {
  std::vector<Check> out;
  for (const auto& table : golden::tc_tables()) {
    if (o.d && *o.d != table.d) continue;
    int n_top = table.rows.back().n;
    if (o.n_max) n_top = std::min(n_top, *o.n_max);
    if (n_top < 2) continue;
    const words::TcTable tc(table.d, n_top);
    Tally t;
    for (const auto& row : table.rows) {
      if (row.n > n_top) break;
      for (std::size_t k = 0; k < row.by_k.size(); ++k) {
        const Count expected(row.by_k[k]);
        const Count& got = tc.at(row.n, static_cast<int>(k));
        t.expect(got == expected, cell(table.d, row.n, static_cast<int>(k)) + ": " + to_string(got) +
                                      " != " + row.by_k[k]);
      }
    }
    out.push_back(t.finish("golden-tables", "TC table d=" + std::to_string(table.d)));
  }
  Tally t1;
  for (const auto& row : golden::table1()) {
    if (o.d && *o.d != row.d) continue;
    const auto p = asymp::params(row.d);
    t1.expect(p.alpha == Ratio(row.alpha), "alpha d=" + std::to_string(row.d));
    t1.expect(p.gamma == Ratio(row.gamma), "gamma d=" + std::to_string(row.d));
    t1.expect(std::fabs(p.beta - row.beta_approx) < 1e-2, "beta d=" + std::to_string(row.d));
    t1.expect(p.gamma == 4 * words::lambda(row.d), "gamma = 4 lambda, d=" + std::to_string(row.d));
  }
  if (!o.d || (*o.d >= 2 && *o.d <= 8)) out.push_back(t1.finish("golden-tables", "asymptotic parameters"));
  return out;
}

std::vector<Check> cross_method(const SuiteOptions& o) {
  std::vector<Check> out;
  const int n_graph = std::min(o.n_max.value_or(6), compgraph::kDefaultCompgraphNCeiling);
  const int n_genfun = std::max(o.n_max.value_or(12), 2);
  for (int d : d_range(o, {2, 3})) {
    const words::TcTable tc(d, std::max(n_graph, n_genfun));

    Tally g;
    for (int n = 1; n <= n_graph; ++n) {
      for (int k = 0; k <= std::min(n - 1, compgraph::kDefaultCompgraphKCeiling); ++k) {
        const Count got = compgraph::count_tc_compgraph({d, n, k});
        g.expect(got == tc.at(n, k), cell(d, n, k));
      }
    }
    out.push_back(g.finish("cross-method", "component graphs vs words, d=" + std::to_string(d)));

    Tally f;
    for (int n = 2; n <= n_genfun; ++n) {
      f.expect(compgraph::count_tc_genfun_k1(d, n) == tc.at(n, 1), "k=1 " + cell(d, n, 1));
      f.expect(compgraph::count_star({d, n, 1}) == tc.at(n, 1), "star " + cell(d, n, 1));
      if (d <= 3) f.expect(compgraph::closed_form_k1(d, n) == tc.at(n, 1), "closed k=1 " + cell(d, n, 1));
      if (n >= 3) {
        f.expect(compgraph::count_tc_genfun_k2(d, n) == tc.at(n, 2), "k=2 " + cell(d, n, 2));
        if (d <= 3) f.expect(compgraph::closed_form_k2(d, n) == tc.at(n, 2), "closed k=2 " + cell(d, n, 2));
      }
    }
    out.push_back(f.finish("cross-method", "generating functions and closed forms vs words, d=" + std::to_string(d)));

    Tally c;
    const int n_otc = std::max(o.n_max.value_or(40), 1);
    for (int n = 1; n <= n_otc; ++n) {
      for (int k = 0; k < n; ++k) {
        c.expect(onecomp::count_otc({d, n, k}) == onecomp::count_otc_direct({d, n, k}), cell(d, n, k));
      }
      c.expect(onecomp::count_otc({d, n, 0}) == onecomp::count_phylo_trees(n), "k=0 trees n=" + std::to_string(n));
      if (n <= n_genfun) c.expect(tc.at(n, 0) == onecomp::count_phylo_trees(n), "TC k=0 n=" + std::to_string(n));
    }
    out.push_back(c.finish("cross-method", "one-component formulas, d=" + std::to_string(d)));
  }
  return out;
}

std::vector<Check> oracle(const SuiteOptions& o) {
  std::vector<Check> out;
  const int n_top = o.n_max.value_or(5);
  for (int d : d_range(o, {2, 3, 4})) {
    const words::WordCountTable c(d, n_top);
    Tally t;
    for (int n = 1; n <= n_top; ++n) {
      for (int k = 0; k <= n; ++k) {
        const Count brute = words::count_words_by_prefix_states(d, n, k, n_top);
        t.expect(brute == c.at(n, k), "c" + cell(d, n, k) + ": " + to_string(brute) + " vs " + to_string(c.at(n, k)));
        // full enumeration where it stays cheap
        if (c.at(n, k) <= 200000) {
          bool all_valid = true;
          const auto seen = words::enumerate_words(
              d, n, k, [&](const words::Word& w) { all_valid = all_valid && words::is_valid_word(d, w); }, n_top);
          t.expect(all_valid && Count(std::to_string(seen)) == c.at(n, k), "enumeration " + cell(d, n, k));
        }
      }
    }
    out.push_back(t.finish("oracle", "word recurrence vs brute force, d=" + std::to_string(d)));
  }
  return out;
}

std::vector<Check> inequalities(const SuiteOptions& o) {
  std::vector<Check> out;
  const int n_top = std::max(o.n_max.value_or(12), 2);
  for (int d : d_range(o, {2, 3, 4, 5, 6})) {
    const words::TcTable tc(d, n_top);
    Tally a;
    for (int n = 2; n <= n_top; ++n) {
      for (int k = 0; k <= n - 2; ++k) {
        const Count lhs = 2 * Count(n - k - 1) * tc.at(n, k);
        a.expect(lhs <= tc.at(n, k + 1), "chain " + cell(d, n, k));
        if (d == 2 && k == n - 2) a.expect(lhs == tc.at(n, k + 1), "equality " + cell(d, n, k));
      }
    }
    out.push_back(a.finish("inequalities", "step bound TC(n,k) <= TC(n,k+1)/(2(n-k-1)), d=" + std::to_string(d)));

    Tally r;
    for (int n = 2; n <= n_top; ++n) {
      const Ratio ratio = fraction(tc.total(n), tc.at(n, n - 1));
      // the chain gives ratio <= sum_j 1/(2^j j!) < sqrt(e)
      Ratio partial = 0;
      for (int j = 0; j < n; ++j) partial += fraction(1, power(Count(2), j) * factorial(j));
      r.expect(ratio >= 1 && ratio <= partial && to_double(ratio) <= std::sqrt(std::exp(1.0)),
               "ratio n=" + std::to_string(n));
    }
    out.push_back(r.finish("inequalities", "1 <= TC_n/TC_{n,n-1} <= sqrt(e), d=" + std::to_string(d)));

    if (d == 2) {
      Tally b;
      for (int n = 2; n <= n_top; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
          const Ratio mid(tc.at(n, n - 1 - k));
          const Ratio upper = Ratio(tc.at(n, n - k)) / (2 * k);
          const Ratio lower = fraction(Count(n - k) * tc.at(n, n - k), Count(k) * (3 * n - k - 3));
          b.expect(lower <= mid && mid <= upper, "two-sided " + cell(d, n, k));
        }
      }
      out.push_back(b.finish("inequalities", "two-sided bounds, d=2"));
    }
  }
  return out;
}

std::vector<Check> sackin_suite(const SuiteOptions& o) {
  std::vector<Check> out;
  const int n_top = o.n_max.value_or(25);
  for (int d : d_range(o, {2, 3, 4, 5, 6})) {
    Tally t;
    for (int n = 1; n <= n_top; ++n) {
      for (int k = 0; k < n; ++k) {
        const Params p{d, n, k};
        const auto closed = sackin::path_length_total(p);
        t.expect(closed == sackin::path_length_total_recursive(p), "recurrence " + cell(d, n, k));
        const Count groupings =
            exact_div(factorial(static_cast<long>(d) * k), power(factorial(d), static_cast<unsigned long>(k)));
        t.expect(closed.value == groupings * sackin::unary_binary_path_length(n - k, d * k),
                 "unary-binary factorization " + cell(d, n, k));
      }
    }
    if (n_top >= 2) t.expect(sackin::path_length_total({d, 2, 0}).value == 5, "P(2,0) = 5");
    out.push_back(t.finish("sackin", "path length closed form vs recurrence, d=" + std::to_string(d)));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"golden-tables", "cross-method", "oracle", "inequalities",
                                                 "sackin"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& options) {
  if (options.d && *options.d < 2) throw DomainError("d must be >= 2");
  if (options.n_max && *options.n_max < 1) throw DomainError("n-max must be >= 1");
  if (suite == "golden-tables") return golden_tables(options);
  if (suite == "cross-method") return cross_method(options);
  if (suite == "oracle") return oracle(options);
  if (suite == "inequalities") return inequalities(options);
  if (suite == "sackin") return sackin_suite(options);
  throw DomainError("unknown suite '" + suite + "'");
}

bool all_passed(const std::vector<Check>& checks) {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace tcnet::verify
