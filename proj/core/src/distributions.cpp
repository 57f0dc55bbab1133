#include "tcnet/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tcnet/onecomp.hpp"
#include "tcnet/params.hpp"
#include "tcnet/words.hpp"

namespace tcnet::dist {
namespace {

Pmf normalize(const std::vector<Count>& weights) {
  Count total = 0;
  for (const auto& w : weights) total += w;
  Pmf p;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    p.mass[static_cast<long>(k)] = fraction(weights[k], total);
  }
  return p;
}

Pmf normalize(const std::vector<Ratio>& weights) {
  Ratio total = 0;
  for (const auto& w : weights) total += w;
  Pmf p;
  for (std::size_t k = 0; k < weights.size(); ++k) p.mass[static_cast<long>(k)] = weights[k] / total;
  return p;
}

const Ratio kTailLimit = fraction(1, 1000000000000000L);

}  // namespace

Ratio Pmf::at(long k) const {
  auto it = mass.find(k);
  return it == mass.end() ? Ratio(0) : it->second;
}

Ratio Pmf::total() const {
  Ratio s = 0;
  for (const auto& [k, m] : mass) s += m;
  return s;
}

Ratio Pmf::cdf(long k) const {
  Ratio s = 0;
  for (const auto& [x, m] : mass) {
    if (x > k) break;
    s += m;
  }
  return s;
}

Family parse_family(const std::string& s) {
  if (s == "onecomp") return Family::onecomp;
  if (s == "general") return Family::general;
  throw DomainError("unknown family '" + s + "' (expected onecomp or general)");
}

std::string to_string(Family f) { return f == Family::onecomp ? "onecomp" : "general"; }

Pmf ret_pmf(Family family, int d, int n, DistCeilings ceilings) {
  validate_dn(d, n);
  const int ceiling = family == Family::onecomp ? ceilings.onecomp_n_max : ceilings.general_n_max;
  if (n > ceiling) {
    throw DomainError("n=" + std::to_string(n) + " exceeds the " + to_string(family) +
                      " ceiling " + std::to_string(ceiling));
  }
  std::vector<Count> w(static_cast<std::size_t>(n));
  if (family == Family::onecomp) {
    for (int k = 0; k < n; ++k) w[k] = onecomp::count_otc({d, n, k});
  } else {
    const words::TcTable tc(d, n);
    for (int k = 0; k < n; ++k) w[k] = tc.at(n, k);
  }
  return normalize(w);
}

Pmf complement(const Pmf& p, long n) {
  Pmf q;
  for (const auto& [k, m] : p.mass) q.mass[n - 1 - k] = m;
  return q;
}

Ratio moment(const Pmf& p, int r, const Ratio& about) {
  if (r < 1) throw DomainError("moment order must be >= 1");
  Ratio s = 0;
  for (const auto& [k, m] : p.mass) {
    Ratio x = Ratio(k) - about;
    Ratio xr = 1;
    for (int i = 0; i < r; ++i) xr *= x;
    s += xr * m;
  }
  return s;
}

Law Law::poisson(const Ratio& rate) {
  if (rate <= 0) throw DomainError("Poisson rate must be positive");
  Law l;
  l.kind = Kind::poisson;
  l.rate = rate;
  return l;
}

Law Law::bessel(int order, const Ratio& arg) {
  if (order < 0 || arg <= 0) throw DomainError("Bessel law needs order >= 0 and a > 0");
  Law l;
  l.kind = Kind::bessel;
  l.order = order;
  l.arg = arg;
  return l;
}

Law Law::dirac(long point) {
  Law l;
  l.kind = Kind::dirac;
  l.point = point;
  return l;
}

Pmf reference_pmf(const Law& law, int truncation) {
  if (truncation < 0) throw DomainError("truncation must be >= 0");
  if (law.kind == Law::Kind::dirac) {
    Pmf p;
    p.mass[law.point] = 1;
    return p;
  }
  // weights w_k with w_{k+1} = w_k * step(k); the tail beyond the truncation is
  // at most w_{T+1} / (1 - step(T+1)) once the step ratio is below 1
  std::vector<Ratio> w;
  Ratio cur;
  auto step = [&](long k) -> Ratio {
    if (law.kind == Law::Kind::poisson) return law.rate / Ratio(k + 1);
    const Ratio q = law.arg * law.arg / 4;
    return q / Ratio((k + 1) * (k + 1 + law.order));
  };
  if (law.kind == Law::Kind::poisson) {
    cur = 1;
  } else {
    cur = fraction(1, factorial(law.order));
  }
  for (long k = 0; k <= truncation; ++k) {
    w.push_back(cur);
    cur *= step(k);
  }
  const Ratio next_step = step(truncation + 1);
  Ratio total = 0;
  for (const auto& x : w) total += x;
  if (next_step >= 1 || cur / (Ratio(1) - next_step) >= kTailLimit * total) {
    throw DomainError("truncation " + std::to_string(truncation) + " leaves a tail above 1e-15");
  }
  return normalize(w);
}

double total_variation(const Pmf& p, const Pmf& q) {
  Ratio s = 0;
  for (const auto& [k, m] : p.mass) s += abs(m - q.at(k));
  for (const auto& [k, m] : q.mass) {
    if (!p.mass.count(k)) s += abs(m);
  }
  return to_double(s / 2);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_cdf_diagnostic(int n, DistCeilings ceilings) {
  const Pmf p = ret_pmf(Family::onecomp, 2, n, ceilings);
  const double nn = n;
  const double scale = std::pow(nn / 4.0, 0.25);
  double gap = 0.0;
  Ratio below = 0;
  for (const auto& [k, m] : p.mass) {
    const double z = (static_cast<double>(k) - nn + std::sqrt(nn)) / scale;
    const double phi = normal_cdf(z);
    const Ratio upto = below + m;
    gap = std::max({gap, std::fabs(to_double(below) - phi), std::fabs(to_double(upto) - phi)});
    below = upto;
  }
  return gap;
}

Ratio twig_expectation_bound(int d, int n, DistCeilings ceilings) {
  return moment(complement(ret_pmf(Family::general, d, n, ceilings), n), 1);
}

}  // namespace tcnet::dist
