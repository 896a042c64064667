#pragma once

#include <vector>

#include "bigint.hpp"
#include "metric.hpp"

namespace whm {

/// Hamming-metric Krawtchouk coefficient K_j(i) for length n over F_q.
BigInt krawtchouk(std::uint32_t q, int n, int j, int i);

/// Sphere-packing: largest k with q^k |B(t)| <= q^N.
long packing_bound(const WeightedSpace& space, long t);

/// Covering (existence): smallest k with q^k |DeltaB(t)| >= q^N.
long covering_bound(const WeightedSpace& space, long t);

/// Largest capability any k-dimensional code can have: tau of the vector
/// supported on the first N-k+1 coordinates. Requires 1 <= k <= N.
long singleton_bound(const WeightedSpace& space, long k);

/// Largest k whose Singleton capability is at least t; 0 if none.
long singleton_k_for_t(const WeightedSpace& space, long t);

struct LpBound {
  long k = 0;
  Rational optimum;  // maximum of sum_w A_w
  std::size_t variables = 0;
  std::size_t forbidden = 0;
};

/// Linear-programming bound on the block-weight enumerator with every
/// profile of the difference set DeltaB(t) (other than 0) pinned to zero.
/// k = floor(log_q(optimum)), decided by exact comparison.
LpBound lp_bound_detail(const WeightedSpace& space, long t);
long lp_bound(const WeightedSpace& space, long t);

struct CapabilityInterval {
  long low;
  long high;
};

/// floor((d-1)/2) <= t <= floor((d + lambda_max)/2) - 1 for minimum distance d.
CapabilityInterval t_interval_from_d(const WeightedSpace& space, long d);
/// Distance that guarantees capability t.
long d_required_for_t(long t);

struct BoundRow {
  long t = 0;
  long packing = 0;
  long singleton = 0;
  long lp = 0;
  long covering = 0;
  Rational lp_optimum;
};

struct BoundTable {
  WeightedSpace space;
  std::vector<BoundRow> rows;
};

BoundRow bound_row(const WeightedSpace& space, long t);
/// Rows for t_min..t_max inclusive; empty when t_max < t_min.
BoundTable bound_table(const WeightedSpace& space, long t_min, long t_max);

/// Largest k >= 0 with q^k <= value; value must be >= 1.
long floor_log(std::uint32_t q, const Rational& value);

}  // namespace whm
