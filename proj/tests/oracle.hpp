// Independent exact helpers for oracles.
#ifndef LOCPOLY_TESTS_ORACLE_HPP
#define LOCPOLY_TESTS_ORACLE_HPP

#include <vector>

#include "locpoly/cyclotomic.hpp"

namespace oracle {

using locpoly::Scalar;

// Rank by plain row reduction.
inline std::size_t rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar k = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle

#endif
