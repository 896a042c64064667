#pragma once

#include <optional>
#include <span>
#include <vector>

#include "field.hpp"

namespace whm {

using Rows = std::vector<Vector>;

/// Reduced row echelon form. Zero rows are dropped; pivots[i] is the pivot
/// column of rows[i], strictly increasing.
struct Echelon {
  Rows rows;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Field& f, Rows rows, std::size_t ncols);

std::size_t rank(const Field& f, const Rows& rows, std::size_t ncols);

/// Coefficients x with sum_i x_i * rows[i] == target, if any. When the rows
/// are dependent some solution is returned.
std::optional<Vector> solve_combination(const Field& f, const Rows& rows, std::span<const Element> target);

/// Basis (in echelon form) of { x : rows * x^T = 0 }.
Rows null_space(const Field& f, const Rows& rows, std::size_t ncols);

}  // namespace whm
