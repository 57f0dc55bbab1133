#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/arith.hpp"
#include "tcnet/params.hpp"

// Counting general tree-child networks through their word encoding.
//
// A network with n leaves and k reticulations corresponds (up to a choice of
// free edges and a leaf permutation) to a word over letters w_1..w_{n-1} in
// which k letters occur d+1 times and the rest occur twice, subject to a
// prefix condition. Counting those words (c_{n,k}) is done by a recurrence on
// the suffix shape b_{n,k,m}; the brute-force routes here apply the prefix
// condition literally and serve as the oracle for that recurrence.
namespace tcnet::words {

/// Letter indices are 0-based: index i stands for w_{i+1} and prints as 'a'+i.
struct Word {
  std::vector<std::uint8_t> letters;
  /// Multiplicity of each letter, 2 or d+1.
  std::vector<int> profile;

  /// Parses "baaabb"-style text, inferring each letter's multiplicity from its
  /// occurrence count. Letters must form a contiguous range starting at 'a'.
  static Word parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  /// Letters occurring d+1 times.
  [[nodiscard]] int heavy_letters(int d) const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Default brute-force ceiling on the letter count.
inline constexpr int kDefaultWordCeiling = 5;

/// Prefix condition: in every prefix, any letter whose (shifted) occurrence
/// count exceeds d-2 must have occurred at least as often as every later
/// letter. Letters of multiplicity 2 have their counts shifted up by d-1, so
/// their 0th/1st/2nd occurrence counts as the (d-1)st/dth/(d+1)st.
///
/// Throws DomainError when the profile is malformed (an entry other than 2 or
/// d+1, or occurrence counts disagreeing with the profile).
bool is_valid_word(int d, const Word& w);

/// Visits every valid word with n letters of which k are heavy, each exactly
/// once, in lexicographic order of (heavy-letter set, word). Rejects n above
/// `ceiling`. Returns the number of words visited.
std::uint64_t enumerate_words(int d, int n, int k, const std::function<void(const Word&)>& visit,
                              int ceiling = kDefaultWordCeiling);

/// Counts valid words by walking prefix occurrence vectors and applying the
/// prefix condition at every step (memoized on the vector). Independent of the
/// recurrence; used as its oracle where full enumeration is too large.
Count count_words_by_prefix_states(int d, int n, int k, int ceiling = kDefaultWordCeiling);

/// Full three-index table b_{n,k,m} for 1 <= n <= n_max, 0 <= k <= n, 1 <= m <= n.
/// b_{n,k,m} counts the valid words whose suffix is w_n w_m w_{m+1} ... w_{n-1} w_n.
class BTable {
 public:
  BTable(int d, int n_max);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n_max() const { return n_max_; }
  /// Zero outside 1 <= m <= n, 0 <= k <= n.
  [[nodiscard]] const Count& at(int n, int k, int m) const;
  /// c_{n,k} = sum over m of b_{n,k,m}.
  [[nodiscard]] Count row_sum(int n, int k) const;

 private:
  int d_;
  int n_max_;
  std::vector<std::vector<std::vector<Count>>> cells_;  // [n][k][m]
};

/// c_{n,k} for 1 <= n <= n_max, 0 <= k <= n, filled one row of b at a time
/// with running prefix sums over m. Row k only depends on rows k and k-1, so
/// a nonnegative k_max restricts the work to k <= k_max.
class WordCountTable {
 public:
  WordCountTable(int d, int n_max, int k_max = -1);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n_max() const { return n_max_; }
  /// Throws DomainError for k above k_max.
  [[nodiscard]] const Count& at(int n, int k) const;

 private:
  int d_;
  int n_max_;
  int k_max_;
  std::vector<std::vector<Count>> counts_;  // [n][k]
};

/// c_{n,k}: number of valid words, by the b-recurrence. Zero for k outside 0..n.
Count count_words(int d, int n, int k);

/// Tree-child network count n! c_{n-1,k} / 2^(n-k-1).
Count count_tc_words(const Params& p, KRange range = KRange::strict);

/// Sum of count_tc_words over k.
Count count_tc_total(int d, int n);

/// TC(n,k) for 1 <= n <= n_max, 0 <= k <= n-1 from a single word-count table,
/// optionally limited to k <= k_max.
class TcTable {
 public:
  TcTable(int d, int n_max, int k_max = -1);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n_max() const { return n_max_; }
  /// Zero for k outside 0..n-1; throws DomainError for k above k_max.
  [[nodiscard]] const Count& at(int n, int k) const;
  /// Needs the full table.
  [[nodiscard]] Count total(int n) const;

 private:
  int d_;
  int n_max_;
  int k_max_;
  std::vector<std::vector<Count>> rows_;
};

/// b_{n,m} := b_{n,n,m}, the k = n slice, as rows [n][m] with 0 <= m <= n.
using BMaxRows = std::vector<std::vector<Count>>;

/// k = n slice from the two-term recurrence
///   b_{n,m} = (dn+m-2)/(dn+m-d-1) b_{n,m-1} + binom(dn+m-2, d-1) b_{n-1,m}.
BMaxRows b_max_table(int d, int n_max);

/// The same slice from b_{n,m} = binom(m+nd-2, d-1) sum_{j<=m} b_{n-1,j}.
BMaxRows b_max_table_binomial_form(int d, int n_max);

/// lambda(d) = (d+1)^(d-1) / (d-1)!.
Ratio lambda(int d);

/// e_{N,M} = b_{n,m} / (lambda^n (n!)^(d-1)) with n = (N+M)/2, m = (N-M)/2,
/// stored for every 1 <= n <= n_max, 0 <= m <= n.
class ETable {
 public:
  struct Cell {
    int N;
    int M;
  };

  ETable(int d, int n_max);

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int n_max() const { return n_max_; }
  /// Zero outside the stored domain (odd N+M, M < 0, M > N).
  [[nodiscard]] Ratio at(int N, int M) const;
  [[nodiscard]] double at_double(int N, int M) const;

  /// mu_{N,M} = 1 + 2(d-1) / ((d+1)N + (d-1)M - 2(d+1)).
  [[nodiscard]] Ratio mu(int N, int M) const;
  /// nu_{N,M} = prod_{i=2..d} (1 - 2(M+i) / ((d+1)(N+M))).
  [[nodiscard]] Ratio nu(int N, int M) const;

  /// Cells where e_{N,M} != mu e_{N-1,M+1} + nu e_{N-1,M-1} (N >= 3) or where
  /// the N = 2 boundary differs from e_{2,0} = 1/lambda, e_{2,2} = 0.
  [[nodiscard]] std::vector<Cell> recurrence_failures() const;
  /// Number of cells checked by recurrence_failures().
  [[nodiscard]] std::size_t cell_count() const;

 private:
  int d_;
  int n_max_;
  std::vector<std::vector<Ratio>> cells_;  // [n][m]
};

/// Builds the table and throws ConsistencyError if any cell breaks the recurrence.
ETable e_table(int d, int n_max);

}  // namespace tcnet::words
