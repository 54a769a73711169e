#include "qmval/linalg.hpp"

#include <algorithm>

namespace qmval {

namespace {

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> echelonize(std::vector<std::vector<Rat>>& rows,
                                    std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rat inv = Rat(1) / rows[lead][col];
    for (std::size_t j = col; j < rows[lead].size(); ++j) rows[lead][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const Rat factor = rows[r][col];
      for (std::size_t j = col; j < rows[r].size(); ++j)
        rows[r][j] -= factor * rows[lead][j];
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace

int matrix_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  return static_cast<int>(echelonize(rows, ncols).size());
}

std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
  if (a.size() != b.size()) throw invalid_input("system shape mismatch");
  if (a.empty()) return std::nullopt;
  const std::size_t ncols = a[0].size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  std::vector<std::size_t> pivots = echelonize(a, ncols);

  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][ncols] != 0) return std::nullopt;  // inconsistent
  if (pivots.size() != ncols) return std::nullopt;  // free variables

  std::vector<Rat> x(ncols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
  return x;
}

std::optional<std::vector<Rat>> nullspace_line(std::vector<std::vector<Rat>> rows,
                                               std::size_t ncols) {
  std::vector<std::size_t> pivots = echelonize(rows, ncols);
  if (pivots.size() + 1 != ncols) return std::nullopt;

  std::size_t free_col = 0;
  {
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    while (free_col < ncols && is_pivot[free_col]) ++free_col;
  }

  std::vector<Rat> v(ncols, Rat(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    v[pivots[r]] = -rows[r][free_col];
  return v;
}

}  // namespace qmval
