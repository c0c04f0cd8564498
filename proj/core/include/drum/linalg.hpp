#pragma once

#include <optional>
#include <vector>

#include "drum/rational.hpp"

namespace drum {

using Mat = std::vector<std::vector<Rat>>;

/// Gauss-Jordan solve of A x = b over the rationals, row-major A of size
/// m x n. Returns the unique solution when rank(A) == n and the system is
/// consistent; nullopt when the columns are dependent or the system has no
/// solution.
inline std::optional<std::vector<Rat>> solve_unique(Mat a, std::vector<Rat> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_row_of_col(n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) return std::nullopt;  // rank deficient in this column
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    const Rat d = a[rank][col];
    for (std::size_t k = col; k < n; ++k) a[rank][k] /= d;
    b[rank] /= d;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[rank][k];
      b[r] -= f * b[rank];
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r)
    if (b[r] != 0) return std::nullopt;  // inconsistent
  std::vector<Rat> x(n);
  for (std::size_t col = 0; col < n; ++col) x[col] = b[pivot_row_of_col[col]];
  return x;
}

}  // namespace drum
