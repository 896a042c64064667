#pragma once

#include <cstddef>
#include <vector>

#include "bigint.hpp"

namespace whm {

enum class Relation { less_equal, greater_equal, equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::greater_equal;
  Rational rhs = 0;
};

/// maximize objective . x subject to the constraints. Variables are
/// non-negative unless flagged otherwise.
struct RationalLP {
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;  // empty means all non-negative
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational optimum = 0;
  std::vector<Rational> witness;
  std::size_t pivots = 0;
};

/// Exact two-phase primal simplex with Bland's rule. The witness of an
/// optimal result is checked against every constraint before returning;
/// a violation raises DefectError.
LpResult solve_max(const RationalLP& lp);

/// Exact check of a point against all constraints and sign restrictions.
bool satisfies(const RationalLP& lp, const std::vector<Rational>& x);

}  // namespace whm
