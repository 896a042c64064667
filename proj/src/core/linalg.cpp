#include "linalg.hpp"

#include "errors.hpp"

namespace whm {

Echelon row_reduce(const Field& f, Rows rows, std::size_t ncols) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw ParameterError("matrix rows have inconsistent lengths");
    for (auto x : r) {
      if (!f.contains(x)) throw ParameterError("matrix entry " + std::to_string(x) + " is not an element of " + f.describe());
    }
  }
  Echelon e;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    const Element scale = f.inv(rows[top][col]);
    for (auto& x : rows[top]) x = f.mul(scale, x);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][col] == 0) continue;
      vec_axpy(f, f.neg(rows[r][col]), rows[top], rows[r]);
    }
    e.pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  e.rows = std::move(rows);
  return e;
}

std::size_t rank(const Field& f, const Rows& rows, std::size_t ncols) {
  return row_reduce(f, rows, ncols).rows.size();
}

std::optional<Vector> solve_combination(const Field& f, const Rows& rows, std::span<const Element> target) {
  // Solve A^T x = target with A = rows: augmented matrix has one row per coordinate.
  const std::size_t k = rows.size();
  const std::size_t n = target.size();
  Rows aug(n, Vector(k + 1, 0));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != n) throw ParameterError("row length mismatch in linear solve");
      aug[c][i] = rows[i][c];
    }
    aug[c][k] = target[c];
  }
  const Echelon e = row_reduce(f, std::move(aug), k + 1);
  Vector x(k, 0);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;  // 0 = nonzero
    x[e.pivots[r]] = e.rows[r][k];
  }
  return x;
}

Rows null_space(const Field& f, const Rows& rows, std::size_t ncols) {
  const Echelon e = row_reduce(f, rows, ncols);
  std::vector<char> is_pivot(ncols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Rows basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = f.neg(e.rows[r][free]);
    basis.push_back(std::move(v));
  }
  return row_reduce(f, std::move(basis), ncols).rows;
}

}  // namespace whm
