// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tcnet/asymptotics.hpp"
#include "tcnet/cli.hpp"
#include "tcnet/compgraph.hpp"
#include "tcnet/distributions.hpp"
#include "tcnet/golden.hpp"
#include "tcnet/onecomp.hpp"
#include "tcnet/sackin.hpp"
#include "tcnet/verify.hpp"
#include "tcnet/words.hpp"

using namespace tcnet;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail = what;
    passed = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) o.require(false, "over time budget");
  if (!o.passed) ++failures;
  std::printf("%s  %-3d %-38s %7.2fs  %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "golden tables", 10, [] {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--suite", "golden-tables"}, out, err);
    o.require(code == 0, "verify exited " + std::to_string(code) + ": " + out.str());
    int cells = 0;
    for (const auto& t : golden::tc_tables()) {
      for (const auto& r : t.rows) cells += static_cast<int>(r.by_k.size());
    }
    o.require(words::count_tc_words({2, 8, 7}) == Count("8485564550400"), "TC(2,8,7)");
    o.require(words::count_tc_words({3, 7, 6}) == Count("560319972030000"), "TC(3,7,6)");
    o.require(words::count_tc_words({6, 5, 4}) == Count("483098464854720"), "TC(6,5,4)");
    o.detail = std::to_string(cells) + " published cells reproduced";
    return o;
  });

  criterion(2, "cross-method equivalence", 60, [] {
    Outcome o;
    int compared = 0;
    for (int d = 2; d <= 3; ++d) {
      const words::TcTable tc(d, 12);
      for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= std::min(3, n - 1); ++k, ++compared) {
          o.require(compgraph::count_tc_compgraph({d, n, k}) == tc.at(n, k), "compgraph " + to_string(Params{d, n, k}));
        }
      }
      for (int n = 2; n <= 12; ++n) {
        const Count k1 = compgraph::count_tc_genfun_k1(d, n);
        o.require(k1 == tc.at(n, 1) && compgraph::closed_form_k1(d, n) == k1, "k=1 n=" + std::to_string(n));
        compared += 2;
        if (n >= 3) {
          const Count k2 = compgraph::count_tc_genfun_k2(d, n);
          o.require(k2 == tc.at(n, 2) && compgraph::closed_form_k2(d, n) == k2, "k=2 n=" + std::to_string(n));
          compared += 2;
        }
      }
    }
    if (o.passed) o.detail = std::to_string(compared) + " comparisons agree";
    return o;
  });

  criterion(3, "word oracle vs recurrence", 120, [] {
    Outcome o;
    int enumerated = 0, walked = 0;
    for (int d = 2; d <= 4; ++d) {
      const words::WordCountTable c(d, 5);
      for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
          const std::string cell = "c" + to_string(Params{d, n, k});
          if (c.at(n, k) <= 5000000) {
            const auto seen = words::enumerate_words(d, n, k, [](const words::Word&) {});
            o.require(Count(std::to_string(seen)) == c.at(n, k), "enumeration " + cell);
            ++enumerated;
          }
          o.require(words::count_words_by_prefix_states(d, n, k) == c.at(n, k), "prefix walk " + cell);
          ++walked;
        }
      }
    }
    if (o.passed) {
      o.detail = std::to_string(walked) + " cells by prefix walk, " + std::to_string(enumerated) +
                 " also by full enumeration";
    }
    return o;
  });

  criterion(4, "one-component dual formulas", 60, [] {
    Outcome o;
    int compared = 0;
    for (int d = 2; d <= 8; ++d) {
      const words::TcTable tc(d, 40, 0);
      for (int n = 1; n <= 40; ++n) {
        for (int k = 0; k < n; ++k, ++compared) {
          o.require(onecomp::count_otc({d, n, k}) == onecomp::count_otc_direct({d, n, k}), to_string(Params{d, n, k}));
        }
        const Count trees = double_factorial(2L * n - 3);
        o.require(onecomp::count_otc({d, n, 0}) == trees && tc.at(n, 0) == trees, "k=0 n=" + std::to_string(n));
      }
    }
    if (o.passed) o.detail = std::to_string(compared) + " cells agree";
    return o;
  });

  criterion(5, "path length consistency", 60, [] {
    Outcome o;
    int cells = 0;
    for (int d = 2; d <= 6; ++d) {
      for (int n = 1; n <= 25; ++n, cells += n - 1) {
        for (int k = 0; k < n; ++k) {
          const Params p{d, n, k};
          const auto closed = sackin::path_length_total(p);
          o.require(closed == sackin::path_length_total_recursive(p), "recurrence " + to_string(p));
          const Count groupings = exact_div(factorial(static_cast<long>(d) * k), power(factorial(d), k));
          o.require(closed.value == groupings * sackin::unary_binary_path_length(n - k, d * k), "factorization " + to_string(p));
        }
      }
    }
    o.require(sackin::path_length_total({2, 2, 0}).value == 5, "P(2,0) = 5");
    if (o.passed) o.detail = std::to_string(cells) + " cells, both identities";
    return o;
  });

  criterion(6, "asymptotic parameter table", 5, [] {
    Outcome o;
    for (const auto& row : golden::table1()) {
      const auto p = asymp::params(row.d);
      const std::string d = "d=" + std::to_string(row.d);
      o.require(p.alpha == Ratio(row.alpha), "alpha " + d);
      o.require(p.gamma == Ratio(row.gamma), "gamma " + d);
      o.require(std::fabs(p.beta - row.beta_approx) <= 1e-2, "beta " + d);
      o.require(p.gamma == 4 * words::lambda(row.d), "gamma = 4 lambda " + d);
    }
    if (o.passed) o.detail = std::to_string(golden::table1().size()) + " rows";
    return o;
  });

  criterion(7, "inequality suite", 60, [] {
    Outcome o;
    const auto checks = verify::run_suite("inequalities");
    for (const auto& c : checks) o.require(c.passed, c.name + ": " + c.detail);
    for (const auto& t : golden::tc_tables()) {
      const auto more = verify::run_suite("inequalities", {t.d, t.rows.back().n});
      for (const auto& c : more) o.require(c.passed, c.name + ": " + c.detail);
    }
    if (o.passed) o.detail = std::to_string(checks.size()) + " check groups";
    return o;
  });

  criterion(8, "limit-law diagnostics", 300, [] {
    Outcome o;
    std::string detail;
    // (a)
    const dist::Pmf pois = dist::reference_pmf(dist::Law::poisson(fraction(1, 2)));
    double prev = 2.0;
    for (int n : {6, 8, 10, 12}) {
      const double tv = dist::total_variation(dist::complement(dist::ret_pmf(dist::Family::general, 2, n), n), pois);
      o.require(tv < prev, "(a) TV not decreasing at n=" + std::to_string(n));
      prev = tv;
    }
    detail += "(a) TV(12)=" + fmt(prev);
    // (b)
    const Ratio r3 = fraction(onecomp::count_otc_total(3, 200), onecomp::count_otc({3, 200, 199}));
    const double gap = std::fabs(to_double(r3) - asymp::bessel_I(1, 2.0));
    o.require(gap < 1e-3, "(b) |ratio - I1(2)| = " + fmt(gap));
    detail += " (b) gap=" + fmt(gap);
    // (c)
    Ratio top_prev = 0;
    for (int n : {4, 5, 6, 7}) {
      const Ratio top = dist::ret_pmf(dist::Family::general, 3, n).at(n - 1);
      o.require(top > top_prev, "(c) mass at k=n-1 not increasing at n=" + std::to_string(n));
      top_prev = top;
    }
    detail += " (c) P(7)=" + fmt(to_double(top_prev));
    // (d)
    prev = 2.0;
    for (int n : {50, 100, 200}) {
      const double g = dist::normal_cdf_diagnostic(n);
      o.require(g < prev, "(d) normal gap not decreasing at n=" + std::to_string(n));
      prev = g;
    }
    detail += " (d) gap(200)=" + fmt(prev);
    if (o.passed) o.detail = detail;
    return o;
  });

  criterion(9, "e-table recurrence", 60, [] {
    Outcome o;
    std::size_t cells = 0;
    for (int d = 2; d <= 4; ++d) {
      const words::ETable e(d, 40);
      o.require(e.recurrence_failures().empty(), "d=" + std::to_string(d));
      cells += e.cell_count();
    }
    if (o.passed) o.detail = std::to_string(cells) + " cells exact";
    return o;
  });

  criterion(10, "fixed-k asymptotics", 60, [] {
    Outcome o;
    const words::TcTable tc(2, 500, 1);
    double prev = 0.0;
    for (int n = 50; n <= 500; n += 50) {
      const double r = ratio(tc.at(n, 1), compgraph::asympt_tc_fixed_k(2, n, 1));
      o.require(r > prev, "not monotone at n=" + std::to_string(n));
      prev = r;
    }
    o.require(std::fabs(prev - 1.0) <= 0.1, "ratio at 500 = " + fmt(prev));
    if (o.passed) o.detail = "ratio(500)=" + fmt(prev);
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
