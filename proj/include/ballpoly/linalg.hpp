#ifndef BALLPOLY_LINALG_HPP
#define BALLPOLY_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ballpoly/rational.hpp"

namespace ballpoly {

using RationalVector = std::vector<Rational>;

/// Row-reduces in place. Columns are scanned left to right and the first row
/// with a nonzero entry becomes the pivot. Returns pivot column per pivot row.
inline std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);

    RationalVector& prow = rows[rank];
    const Rational inv = 1 / prow[col];
    std::vector<std::size_t> support;
    for (std::size_t c = col; c < cols; ++c) {
      if (prow[c] != 0) {
        prow[c] *= inv;
        support.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c : support) rows[r][c] -= factor * prow[c];
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

/// Basis of {v : A v = 0}, one vector per free column in increasing order,
/// with 1 at the free column.
inline std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, std::size_t cols) {
  const auto pivots = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ballpoly

#endif  // BALLPOLY_LINALG_HPP
