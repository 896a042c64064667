#include "ratlp.hpp"

#include <optional>

#include "errors.hpp"

namespace whm {

namespace {

// Dense tableau: rows[i] = coefficients of the basic variable basis[i], last
// entry is the right-hand side. The cost row holds reduced costs for a
// maximization, its last entry the current objective value.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis, std::size_t columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns), allowed_(columns, true) {}

  void set_costs(const std::vector<Rational>& cost) {
    cost_.assign(columns_ + 1, Rational(0));
    for (std::size_t j = 0; j < columns_; ++j) cost_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (sgn(rows_[i][j]) != 0) cost_[j] -= cb * rows_[i][j];
      }
    }
    // cost_[columns_] now holds -(c_B . b); flip to the objective value.
    cost_[columns_] = -cost_[columns_];
  }

  // Runs Bland-rule pivots to optimality. Returns false when unbounded.
  bool optimize() {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (allowed_[j] && sgn(cost_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*enter];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[i][columns_] / a;
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    std::vector<Rational>& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= columns_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[c]) == 0) return;
      const Rational factor = row[c];
      for (auto j : nz) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    // Cost row stores -objective in the rhs slot during elimination.
    cost_[columns_] = -cost_[columns_];
    eliminate(cost_);
    cost_[columns_] = -cost_[columns_];
    basis_[r] = c;
  }

  void forbid(std::size_t j) { allowed_[j] = false; }
  void drop_row(std::size_t i) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  const Rational& objective() const { return cost_[columns_]; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  const Rational& entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rows_[i][columns_]; }
  std::size_t pivots() const { return pivots_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
  std::vector<bool> allowed_;
  std::vector<Rational> cost_;
  std::size_t pivots_ = 0;
};

}  // namespace

bool satisfies(const RationalLP& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variables) return false;
  for (std::size_t j = 0; j < lp.variables; ++j) {
    const bool nonneg = lp.nonnegative.empty() || lp.nonnegative[j];
    if (nonneg && sgn(x[j]) < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < lp.variables; ++j) {
      if (sgn(c.coefficients[j]) != 0) lhs += c.coefficients[j] * x[j];
    }
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

LpResult solve_max(const RationalLP& lp) {
  const std::size_t V = lp.variables;
  if (V == 0) throw ParameterError("linear program has no variables");
  if (lp.objective.size() != V) throw ParameterError("objective length does not match variable count");
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != V) throw ParameterError("sign flags do not match variable count");
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != V) throw ParameterError("constraint length does not match variable count");
  }

  // Structural columns: one per variable, plus a negative part for free ones.
  std::vector<std::size_t> plus(V), minus(V, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < V; ++j) plus[j] = cols++;
  for (std::size_t j = 0; j < V; ++j) {
    if (!lp.nonnegative.empty() && !lp.nonnegative[j]) minus[j] = cols++;
  }
  const std::size_t structural = cols;

  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
  };
  std::vector<Row> normalized;
  for (const auto& c : lp.constraints) {
    Row r{std::vector<Rational>(structural, Rational(0)), c.relation, c.rhs};
    for (std::size_t j = 0; j < V; ++j) {
      r.a[plus[j]] = c.coefficients[j];
      if (minus[j] != SIZE_MAX) r.a[minus[j]] = -c.coefficients[j];
    }
    if (sgn(r.b) < 0) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
      if (r.rel == Relation::less_equal) {
        r.rel = Relation::greater_equal;
      } else if (r.rel == Relation::greater_equal) {
        r.rel = Relation::less_equal;
      }
    }
    normalized.push_back(std::move(r));
  }

  const std::size_t m = normalized.size();
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& r : normalized) {
    if (r.rel != Relation::equal) ++slack_count;
    if (r.rel != Relation::less_equal) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t total = first_artificial + artificial_count;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(total + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = structural, next_art = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < structural; ++j) rows[i][j] = normalized[i].a[j];
    rows[i][total] = normalized[i].b;
    switch (normalized[i].rel) {
      case Relation::less_equal:
        rows[i][next_slack] = 1;
        basis[i] = next_slack++;
        break;
      case Relation::greater_equal:
        rows[i][next_slack++] = -1;
        rows[i][next_art] = 1;
        basis[i] = next_art++;
        break;
      case Relation::equal:
        rows[i][next_art] = 1;
        basis[i] = next_art++;
        break;
    }
  }

  Tableau tab(std::move(rows), std::move(basis), total);
  LpResult result;

  if (artificial_count > 0) {
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t j = first_artificial; j < total; ++j) phase1[j] = -1;
    tab.set_costs(phase1);
    if (!tab.optimize()) throw DefectError("phase-one problem reported unbounded");
    if (sgn(tab.objective()) < 0) {
      result.status = LpStatus::infeasible;
      result.pivots = tab.pivots();
      return result;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t i = 0; i < tab.row_count();) {
      if (tab.basic(i) < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (sgn(tab.entry(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        tab.pivot(i, *col);
        ++i;
      } else {
        tab.drop_row(i);  // redundant equality
      }
    }
    for (std::size_t j = first_artificial; j < total; ++j) tab.forbid(j);
  }

  std::vector<Rational> phase2(total, Rational(0));
  for (std::size_t j = 0; j < V; ++j) {
    phase2[plus[j]] = lp.objective[j];
    if (minus[j] != SIZE_MAX) phase2[minus[j]] = -lp.objective[j];
  }
  tab.set_costs(phase2);
  if (!tab.optimize()) {
    result.status = LpStatus::unbounded;
    result.pivots = tab.pivots();
    return result;
  }

  std::vector<Rational> value(total, Rational(0));
  for (std::size_t i = 0; i < tab.row_count(); ++i) value[tab.basic(i)] = tab.rhs(i);
  result.witness.assign(V, Rational(0));
  for (std::size_t j = 0; j < V; ++j) {
    result.witness[j] = value[plus[j]];
    if (minus[j] != SIZE_MAX) result.witness[j] -= value[minus[j]];
  }
  result.optimum = 0;
  for (std::size_t j = 0; j < V; ++j) result.optimum += lp.objective[j] * result.witness[j];
  if (result.optimum != tab.objective()) throw DefectError("simplex objective disagrees with its witness");
  if (!satisfies(lp, result.witness)) throw DefectError("simplex witness violates a constraint");
  result.status = LpStatus::optimal;
  result.pivots = tab.pivots();
  return result;
}

}  // namespace whm
