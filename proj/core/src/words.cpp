#include "tcnet/words.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace tcnet::words {
namespace {

void check_profile(int d, const Word& w) {
  std::vector<int> seen(w.profile.size(), 0);
  for (auto letter : w.letters) {
    if (letter >= w.profile.size()) {
      throw DomainError("word uses letter index " + std::to_string(letter) + " beyond its profile");
    }
    ++seen[letter];
  }
  for (std::size_t i = 0; i < w.profile.size(); ++i) {
    if (w.profile[i] != 2 && w.profile[i] != d + 1) {
      throw DomainError("letter multiplicity must be 2 or d+1, got " + std::to_string(w.profile[i]));
    }
    if (seen[i] != w.profile[i]) {
      throw DomainError("letter '" + std::string(1, static_cast<char>('a' + i)) + "' occurs " +
                        std::to_string(seen[i]) + " times, profile says " +
                        std::to_string(w.profile[i]));
    }
  }
}

// Occurrence count with the shift applied to letters of multiplicity 2.
inline int shifted(int d, int count, int multiplicity) {
  return multiplicity == 2 ? count + d - 1 : count;
}

// Checks the prefix condition after letter x was just appended. Only pairs
// involving x can change status, so the test is O(n).
bool extension_ok(int d, const std::vector<int>& counts, const std::vector<int>& profile, int x) {
  const int n = static_cast<int>(counts.size());
  const int sx = shifted(d, counts[x], profile[x]);
  for (int i = 0; i < x; ++i) {
    const int si = shifted(d, counts[i], profile[i]);
    if (si > d - 2 && si < sx) return false;
  }
  if (sx > d - 2) {
    for (int j = x + 1; j < n; ++j) {
      if (sx < shifted(d, counts[j], profile[j])) return false;
    }
  }
  return true;
}

// Calls fn(profile) for every choice of k heavy letters among n, in
// lexicographic order of the heavy index set.
template <typename Fn>
void for_each_profile(int d, int n, int k, Fn&& fn) {
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  std::vector<int> profile(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) profile[i] = pick[i] ? d + 1 : 2;
    fn(profile);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

void check_word_args(int d, int n, int k, int ceiling) {
  validate_dn(d, n);
  if (k < 0 || k > n) {
    throw DomainError("heavy letter count must satisfy 0 <= k <= n, got k=" + std::to_string(k));
  }
  if (n > ceiling) {
    throw DomainError("n=" + std::to_string(n) + " exceeds the brute-force ceiling " +
                      std::to_string(ceiling));
  }
}

}  // namespace

Word Word::parse(std::string_view text) {
  Word w;
  int max_letter = -1;
  for (char ch : text) {
    if (ch < 'a' || ch > 'z') throw DomainError("word letters must be in a..z");
    const int idx = ch - 'a';
    w.letters.push_back(static_cast<std::uint8_t>(idx));
    max_letter = std::max(max_letter, idx);
  }
  w.profile.assign(static_cast<std::size_t>(max_letter + 1), 0);
  for (auto l : w.letters) ++w.profile[l];
  for (std::size_t i = 0; i < w.profile.size(); ++i) {
    if (w.profile[i] == 0) {
      throw DomainError("letter '" + std::string(1, static_cast<char>('a' + i)) +
                        "' missing; letters must form a contiguous range from 'a'");
    }
  }
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters.size());
  for (auto l : letters) s.push_back(static_cast<char>('a' + l));
  return s;
}

int Word::heavy_letters(int d) const {
  return static_cast<int>(std::count(profile.begin(), profile.end(), d + 1));
}

bool is_valid_word(int d, const Word& w) {
  if (d < 2) throw DomainError("d must be >= 2");
  check_profile(d, w);
  const int n = static_cast<int>(w.profile.size());
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (auto letter : w.letters) {
    ++counts[letter];
    for (int i = 0; i < n; ++i) {
      const int si = shifted(d, counts[i], w.profile[i]);
      if (si <= d - 2) continue;
      for (int j = i + 1; j < n; ++j) {
        if (si < shifted(d, counts[j], w.profile[j])) return false;
      }
    }
  }
  return true;
}

std::uint64_t enumerate_words(int d, int n, int k, const std::function<void(const Word&)>& visit,
                              int ceiling) {
  check_word_args(d, n, k, ceiling);
  std::uint64_t visited = 0;
  for_each_profile(d, n, k, [&](const std::vector<int>& profile) {
    const int length = std::accumulate(profile.begin(), profile.end(), 0);
    Word w;
    w.profile = profile;
    w.letters.resize(static_cast<std::size_t>(length));
    std::vector<int> counts(static_cast<std::size_t>(n), 0);

    auto dfs = [&](auto&& self, int pos) -> void {
      if (pos == length) {
        ++visited;
        visit(w);
        return;
      }
      for (int x = 0; x < n; ++x) {
        if (counts[x] == profile[x]) continue;
        ++counts[x];
        if (extension_ok(d, counts, profile, x)) {
          w.letters[pos] = static_cast<std::uint8_t>(x);
          self(self, pos + 1);
        }
        --counts[x];
      }
    };
    dfs(dfs, 0);
  });
  return visited;
}

Count count_words_by_prefix_states(int d, int n, int k, int ceiling) {
  check_word_args(d, n, k, ceiling);
  Count total = 0;
  const std::uint64_t radix = static_cast<std::uint64_t>(d) + 2;
  for_each_profile(d, n, k, [&](const std::vector<int>& profile) {
    std::unordered_map<std::uint64_t, Count> memo;
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    auto key = [&] {
      std::uint64_t v = 0;
      for (int c : counts) v = v * radix + static_cast<std::uint64_t>(c);
      return v;
    };
    // number of valid completions of the current prefix
    auto walk = [&](auto&& self) -> Count {
      if (counts == profile) return 1;
      const auto kk = key();
      if (auto it = memo.find(kk); it != memo.end()) return it->second;
      Count sum = 0;
      for (int x = 0; x < n; ++x) {
        if (counts[x] == profile[x]) continue;
        ++counts[x];
        if (extension_ok(d, counts, profile, x)) sum += self(self);
        --counts[x];
      }
      memo.emplace(kk, sum);
      return sum;
    };
    total += walk(walk);
  });
  return total;
}

BTable::BTable(int d, int n_max) : d_(d), n_max_(n_max) {
  validate_dn(d, n_max);
  cells_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    cells_[n].assign(static_cast<std::size_t>(n) + 1, std::vector<Count>(static_cast<std::size_t>(n) + 1, 0));
  }
  cells_[1][0][1] = 1;
  cells_[1][1][1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    const auto& prev = cells_[n - 1];
    for (int k = 0; k <= n; ++k) {
      Count same = 0;  // sum_{j<=m} b_{n-1,k,j}
      Count less = 0;  // sum_{j<=m} b_{n-1,k-1,j}
      for (int m = 1; m <= n; ++m) {
        if (m <= n - 1) {
          if (k <= n - 1) same += prev[k][m];
          if (k >= 1) less += prev[k - 1][m];
        }
        cells_[n][k][m] = same + binomial(n + m + static_cast<long>(k) * (d - 1) - 2, d - 1) * less;
      }
    }
  }
}

const Count& BTable::at(int n, int k, int m) const {
  static const Count zero = 0;
  if (n < 1 || n > n_max_ || k < 0 || k > n || m < 1 || m > n) return zero;
  return cells_[n][k][m];
}

Count BTable::row_sum(int n, int k) const {
  Count s = 0;
  for (int m = 1; m <= n; ++m) s += at(n, k, m);
  return s;
}

WordCountTable::WordCountTable(int d, int n_max, int k_max)
    : d_(d), n_max_(n_max), k_max_(k_max < 0 ? n_max : std::min(k_max, n_max)) {
  validate_dn(d, n_max);
  counts_.resize(static_cast<std::size_t>(n_max) + 1);
  // prefix[k][m] = sum_{j<=m} b_{n-1,k,j} of the previous row
  std::vector<std::vector<Count>> prefix = {{0, 1}, {0, 1}};
  counts_[1] = {1, 1};
  if (k_max_ == 0) {
    prefix.pop_back();
    counts_[1].pop_back();
  }
  for (int n = 2; n <= n_max; ++n) {
    const int k_top = std::min(n, k_max_);
    std::vector<std::vector<Count>> next(static_cast<std::size_t>(k_top) + 1,
                                         std::vector<Count>(static_cast<std::size_t>(n) + 1, 0));
    counts_[n].assign(static_cast<std::size_t>(k_top) + 1, 0);
    for (int k = 0; k <= k_top; ++k) {
      Count running = 0;
      for (int m = 1; m <= n; ++m) {
        const int mm = std::min(m, n - 1);
        const Count same = k <= n - 1 ? prefix[k][mm] : Count(0);
        const Count less = k >= 1 ? prefix[k - 1][mm] : Count(0);
        const Count b = same + binomial(n + m + static_cast<long>(k) * (d - 1) - 2, d - 1) * less;
        running += b;
        next[k][m] = running;
      }
      counts_[n][k] = running;
    }
    prefix = std::move(next);
  }
}

const Count& WordCountTable::at(int n, int k) const {
  static const Count zero = 0;
  if (n < 1 || n > n_max_) throw DomainError("word count table has no row n=" + std::to_string(n));
  if (k > k_max_ && k <= n) {
    throw DomainError("word count table was built for k <= " + std::to_string(k_max_));
  }
  if (k < 0 || k > n) return zero;
  return counts_[n][k];
}

Count count_words(int d, int n, int k) {
  validate_dn(d, n);
  if (k < 0 || k > n) return 0;
  return WordCountTable(d, n, k).at(n, k);
}

Count count_tc_words(const Params& p, KRange range) {
  if (range == KRange::lenient && !k_in_range(p)) return 0;
  validate(p);
  if (p.n == 1) return 1;
  const WordCountTable c(p.d, p.n - 1, p.k);
  return exact_div(factorial(p.n) * c.at(p.n - 1, p.k),
                   power(Count(2), static_cast<unsigned long>(p.n - p.k - 1)));
}

Count count_tc_total(int d, int n) { return TcTable(d, n).total(n); }

TcTable::TcTable(int d, int n_max, int k_max)
    : d_(d), n_max_(n_max), k_max_(k_max < 0 ? n_max : std::min(k_max, n_max)) {
  validate_dn(d, n_max);
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  rows_[1] = {1};
  if (n_max < 2) return;
  const WordCountTable c(d, n_max - 1, k_max_);
  for (int n = 2; n <= n_max; ++n) {
    const int k_top = std::min(n - 1, k_max_);
    rows_[n].resize(static_cast<std::size_t>(k_top) + 1);
    const Count nf = factorial(n);
    for (int k = 0; k <= k_top; ++k) {
      rows_[n][k] = exact_div(nf * c.at(n - 1, k), power(Count(2), static_cast<unsigned long>(n - k - 1)));
    }
  }
}

const Count& TcTable::at(int n, int k) const {
  static const Count zero = 0;
  if (n < 1 || n > n_max_) throw DomainError("TC table has no row n=" + std::to_string(n));
  if (k > k_max_ && k <= n - 1) throw DomainError("TC table was built for k <= " + std::to_string(k_max_));
  if (k < 0 || k > n - 1) return zero;
  return rows_[n][k];
}

Count TcTable::total(int n) const {
  if (k_max_ < n - 1) throw DomainError("TC totals need the full table");
  Count s = 0;
  for (int k = 0; k <= n - 1; ++k) s += at(n, k);
  return s;
}

BMaxRows b_max_table(int d, int n_max) {
  validate_dn(d, n_max);
  BMaxRows b(static_cast<std::size_t>(n_max) + 1);
  b[1] = {0, 1};
  for (long n = 2; n <= n_max; ++n) {
    b[n].assign(static_cast<std::size_t>(n) + 1, 0);
    for (long m = 1; m <= n; ++m) {
      const Count from_below = m <= n - 1 ? b[n - 1][m] : Count(0);
      Ratio v = fraction(Count(d * n + m - 2) * b[n][m - 1], Count(d * n + m - d - 1));
      v += Ratio(binomial(d * n + m - 2, d - 1) * from_below);
      b[n][m] = to_integer(v);
    }
  }
  return b;
}

BMaxRows b_max_table_binomial_form(int d, int n_max) {
  validate_dn(d, n_max);
  BMaxRows b(static_cast<std::size_t>(n_max) + 1);
  b[1] = {0, 1};
  for (long n = 2; n <= n_max; ++n) {
    b[n].assign(static_cast<std::size_t>(n) + 1, 0);
    Count prefix = 0;
    for (long m = 1; m <= n; ++m) {
      if (m <= n - 1) prefix += b[n - 1][m];
      b[n][m] = binomial(m + n * d - 2, d - 1) * prefix;
    }
  }
  return b;
}

Ratio lambda(int d) {
  if (d < 2) throw DomainError("lambda(d) needs d >= 2");
  Ratio r = fraction(power(Count(d + 1), static_cast<unsigned long>(d - 1)), factorial(d - 1));
  return r;
}

ETable::ETable(int d, int n_max) : d_(d), n_max_(n_max) {
  validate_dn(d, n_max);
  const BMaxRows b = b_max_table(d, n_max);
  const Ratio lam = lambda(d);
  cells_.resize(static_cast<std::size_t>(n_max) + 1);
  Ratio lam_pow = 1;
  for (int n = 1; n <= n_max; ++n) {
    lam_pow *= lam;
    Ratio scale = lam_pow * Ratio(power(factorial(n), static_cast<unsigned long>(d - 1)));
    cells_[n].resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      cells_[n][m] = Ratio(b[n][m]) / scale;
    }
  }
}

Ratio ETable::at(int N, int M) const {
  if ((N + M) % 2 != 0 || M < 0 || M > N) return 0;
  const int n = (N + M) / 2;
  const int m = (N - M) / 2;
  if (n < 1) return 0;
  if (n > n_max_) {
    throw DomainError("e-table cell (" + std::to_string(N) + "," + std::to_string(M) +
                      ") lies beyond n_max=" + std::to_string(n_max_));
  }
  return cells_[n][m];
}

double ETable::at_double(int N, int M) const { return to_double(at(N, M)); }

Ratio ETable::mu(int N, int M) const {
  Ratio r = fraction(2L * (d_ - 1), static_cast<long>(d_ + 1) * N + static_cast<long>(d_ - 1) * M - 2L * (d_ + 1));
  return Ratio(1) + r;
}

Ratio ETable::nu(int N, int M) const {
  Ratio r = 1;
  for (int i = 2; i <= d_; ++i) {
    Ratio f = fraction(2L * (M + i), static_cast<long>(d_ + 1) * (N + M));
    r *= Ratio(1) - f;
  }
  return r;
}

std::vector<ETable::Cell> ETable::recurrence_failures() const {
  std::vector<Cell> bad;
  const Ratio inv_lambda = Ratio(1) / lambda(d_);
  for (int n = 1; n <= n_max_; ++n) {
    for (int m = 0; m <= n; ++m) {
      const int N = n + m;
      const int M = n - m;
      const Ratio& v = cells_[n][m];
      bool ok = true;
      if (N <= 2) {
        const Ratio expected = (N == 2 && M == 0) ? inv_lambda : Ratio(0);
        ok = v == expected;
      } else {
        ok = v == mu(N, M) * at(N - 1, M + 1) + nu(N, M) * at(N - 1, M - 1);
      }
      if (!ok) bad.push_back({N, M});
    }
  }
  return bad;
}

std::size_t ETable::cell_count() const {
  std::size_t c = 0;
  for (int n = 1; n <= n_max_; ++n) c += static_cast<std::size_t>(n) + 1;
  return c;
}

ETable e_table(int d, int n_max) {
  if (n_max < 2) throw DomainError("e_table needs n_max >= 2");
  ETable t(d, n_max);
  if (const auto bad = t.recurrence_failures(); !bad.empty()) {
    throw ConsistencyError("e-table recurrence fails at (" + std::to_string(bad.front().N) + "," +
                           std::to_string(bad.front().M) + ") and " + std::to_string(bad.size() - 1) +
                           " other cells");
  }
  return t;
}

}  // namespace tcnet::words
