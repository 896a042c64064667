#include "bounds.hpp"

#include <map>

#include "errors.hpp"
#include "ratlp.hpp"

namespace whm {

BigInt krawtchouk(std::uint32_t q, int n, int j, int i) {
  if (i < 0 || j < 0 || i > n || j > n) throw ParameterError("Krawtchouk indices must lie in 0..n");
  BigInt sum = 0;
  for (int s = 0; s <= j; ++s) {
    BigInt term = binomial(n - i, j - s) * binomial(i, s) * power(q - 1, j - s);
    if (s % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

long floor_log(std::uint32_t q, const Rational& value) {
  if (value < 1) throw ParameterError("floor_log needs a value of at least 1");
  long k = 0;
  BigInt p = q;
  while (Rational(p) <= value) {
    p *= q;
    ++k;
  }
  return k;
}

long packing_bound(const WeightedSpace& space, long t) {
  if (t < 0) throw ParameterError("capability must be non-negative");
  const BigInt ball = ball_size(space, t);
  const BigInt total = power(space.q(), space.length());
  long k = -1;
  BigInt lhs = ball;
  while (lhs <= total) {
    ++k;
    lhs *= space.q();
  }
  return k < 0 ? 0 : k;
}

long covering_bound(const WeightedSpace& space, long t) {
  if (t < 0) throw ParameterError("capability must be non-negative");
  const BigInt diff = diff_ball_size(space, t);
  const BigInt total = power(space.q(), space.length());
  long k = 0;
  BigInt lhs = diff;
  while (lhs < total) {
    ++k;
    lhs *= space.q();
  }
  return k;
}

long singleton_bound(const WeightedSpace& space, long k) {
  const long n = space.length();
  if (k < 1 || k > n) throw ParameterError("dimension must be in 1..N");
  long support = n - k + 1;
  WeightProfile p(space.block_count(), 0);
  for (std::size_t l = 0; l < space.block_count() && support > 0; ++l) {
    const long take = std::min<long>(support, space.blocks()[l]);
    p[l] = static_cast<int>(take);
    support -= take;
  }
  return tau_of_profile(space, p);
}

long singleton_k_for_t(const WeightedSpace& space, long t) {
  if (t < 0) throw ParameterError("capability must be non-negative");
  for (long k = space.length(); k >= 1; --k) {
    if (singleton_bound(space, k) >= t) return k;
  }
  return 0;
}

LpBound lp_bound_detail(const WeightedSpace& space, long t) {
  if (t < 0) throw ParameterError("capability must be non-negative");
  const auto profiles = all_profiles(space);
  std::map<WeightProfile, std::size_t> index;
  for (std::size_t v = 0; v < profiles.size(); ++v) index.emplace(profiles[v], v);

  // Per-block Krawtchouk tables kraw[l][j][i].
  std::vector<std::vector<std::vector<BigInt>>> kraw(space.block_count());
  for (std::size_t l = 0; l < space.block_count(); ++l) {
    const int n = space.blocks()[l];
    kraw[l].assign(n + 1, std::vector<BigInt>(n + 1));
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n; ++i) kraw[l][j][i] = krawtchouk(space.q(), n, j, i);
    }
  }

  RationalLP lp;
  lp.variables = profiles.size();
  lp.objective.assign(profiles.size(), Rational(1));

  LinearConstraint origin{std::vector<Rational>(profiles.size(), Rational(0)), Relation::equal, Rational(1)};
  origin.coefficients[0] = 1;  // zero profile is first in lexicographic order
  lp.constraints.push_back(std::move(origin));

  std::size_t forbidden = 0;
  for (const auto& p : diff_ball_profiles(space, t)) {
    const std::size_t v = index.at(p);
    if (v == 0) continue;
    LinearConstraint pin{std::vector<Rational>(profiles.size(), Rational(0)), Relation::equal, Rational(0)};
    pin.coefficients[v] = 1;
    lp.constraints.push_back(std::move(pin));
    ++forbidden;
  }

  for (const auto& j : profiles) {
    LinearConstraint row{std::vector<Rational>(profiles.size()), Relation::greater_equal, Rational(0)};
    for (std::size_t v = 0; v < profiles.size(); ++v) {
      BigInt prod = 1;
      for (std::size_t l = 0; l < space.block_count(); ++l) prod *= kraw[l][j[l]][profiles[v][l]];
      row.coefficients[v] = Rational(prod);
    }
    lp.constraints.push_back(std::move(row));
  }

  const LpResult res = solve_max(lp);
  if (res.status != LpStatus::optimal) throw DefectError("LP bound problem is not feasible and bounded");
  LpBound out;
  out.optimum = res.optimum;
  out.k = floor_log(space.q(), res.optimum);
  out.variables = profiles.size();
  out.forbidden = forbidden;
  return out;
}

long lp_bound(const WeightedSpace& space, long t) { return lp_bound_detail(space, t).k; }

CapabilityInterval t_interval_from_d(const WeightedSpace& space, long d) {
  if (d < 1) throw ParameterError("minimum distance must be positive");
  return {(d - 1) / 2, (d + space.max_lambda()) / 2 - 1};
}

long d_required_for_t(long t) {
  if (t < 0) throw ParameterError("capability must be non-negative");
  return 2 * t + 1;
}

BoundRow bound_row(const WeightedSpace& space, long t) {
  BoundRow r;
  r.t = t;
  r.packing = packing_bound(space, t);
  r.singleton = singleton_k_for_t(space, t);
  const LpBound lp = lp_bound_detail(space, t);
  r.lp = lp.k;
  r.lp_optimum = lp.optimum;
  r.covering = covering_bound(space, t);
  return r;
}

BoundTable bound_table(const WeightedSpace& space, long t_min, long t_max) {
  if (t_min < 0) throw ParameterError("capability range must start at 0 or above");
  BoundTable table{space, {}};
  for (long t = t_min; t <= t_max; ++t) table.rows.push_back(bound_row(space, t));
  return table;
}

}  // namespace whm
