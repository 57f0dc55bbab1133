#pragma once

#include <string>
#include <vector>

// Published reference values, stored as decimal strings.
namespace tcnet::golden {

struct TcRow {
  int n;
  std::vector<std::string> by_k;  ///< TC(n,k) for k = 0..n-1
};

struct TcTableData {
  int d;
  std::vector<TcRow> rows;
};

/// TC(n,k) for d = 2..6 (rows n = 2..8, 7, 6, 5, 5).
const std::vector<TcTableData>& tc_tables();

struct Table1Row {
  int d;
  std::string alpha;   ///< exact, "p/q"
  double beta_approx;  ///< printed to two decimals
  std::string gamma;   ///< exact, "p/q"
};

const std::vector<Table1Row>& table1();

}  // namespace tcnet::golden
