#pragma once

#include <optional>
#include <vector>

namespace motivic {

/// Exact Gaussian elimination over a field F (needs default construction to
/// zero, F(1), +, -, *, /, ==). Solves A x = b for possibly rectangular A;
/// returns one solution with every free variable set to zero, or nullopt when
/// the system is inconsistent. Pivoting is deterministic (first nonzero row).
template <class F>
std::optional<std::vector<F>> solve_linear_system(std::vector<std::vector<F>> a,
                                                  std::vector<F> b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  const F zero{};
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && a[sel][col] == zero) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    F inv = F(1) / a[row][col];
    for (size_t j = col; j < cols; ++j) a[row][j] = a[row][j] * inv;
    b[row] = b[row] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == zero) continue;
      F factor = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - factor * a[row][j];
      b[i] = b[i] - factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (!(b[i] == zero)) return std::nullopt;
  std::vector<F> x(cols, zero);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace motivic
