#pragma once

#include <vector>

#include "code.hpp"
#include "metric.hpp"

namespace whm {

/// Polyalphabetic code from a systematic mother code over F_{q^mu}: message
/// symbol i < k is restricted to the first sizes[i] basis coordinates and
/// punctured to them, parity symbols are zero-padded to sizes[i].
/// sizes must be sorted non-decreasing with sizes[k-1] == mu, and the mother
/// must be systematic on its first k positions.
PolyalphabeticCode poly_from_mother(const LinearCode& mother, const std::vector<int>& sizes);

/// Same construction for unsorted sizes: symbols are processed in a stable
/// ascending order of size and mapped back afterwards.
PolyalphabeticCode poly_from_mother_any_order(const LinearCode& mother, const std::vector<int>& sizes);

/// Full space F_q^{m_1} x ... x F_q^{m_n} (block distance 1).
PolyalphabeticCode full_poly_code(const FieldPtr& field, const std::vector<int>& sizes);

struct GccOptions {
  /// Use declared outer distances where present instead of exhaustive ones.
  bool use_declared_distances = false;
  std::uint64_t distance_limit = kDefaultDistanceLimit;
};

/// Generalized concatenated code: one nested chain per block, one
/// polyalphabetic outer code per level. Levels and blocks are 0-based.
class GccCode {
 public:
  GccCode(WeightedSpace space, std::vector<NestedChain> chains, std::vector<PolyalphabeticCode> outers,
          GccOptions options = {});

  const WeightedSpace& space() const { return space_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t levels() const { return outers_.size(); }
  std::size_t blocks() const { return chains_.size(); }
  const NestedChain& chain(std::size_t l) const { return chains_.at(l); }
  const PolyalphabeticCode& outer(std::size_t j) const { return outers_.at(j); }
  /// m_{j,l} = k(B_{j,l}) - k(B_{j+1,l}).
  int symbol_size(std::size_t j, std::size_t l) const { return outers_.at(j).symbol_sizes().at(l); }

  std::size_t length() const { return static_cast<std::size_t>(space_.length()); }
  std::size_t dimension() const { return dimension_; }

  std::size_t inner_distance(std::size_t j, std::size_t l) const { return inner_distance_.at(j).at(l); }
  std::size_t outer_distance(std::size_t j) const { return outer_distance_.at(j); }

  /// Lower bound on the minimum weighted distance: per level, the sum of the
  /// d(A_j) smallest weighted inner distances; minimized over levels.
  long designed_distance() const { return designed_distance_; }
  /// Lower bound on the capability: min tau over the profiles that place the
  /// inner distance on d(A_j) blocks of level j.
  long capability_bound() const { return capability_bound_; }

  /// One message per level, message j of length k(A_j).
  Vector encode(const std::vector<Vector>& messages) const;
  /// Message of length k split across levels in order.
  Vector encode_flat(std::span<const Element> message) const;
  /// Generator matrix built from the unit messages.
  LinearCode as_linear_code() const;

 private:
  WeightedSpace space_;
  FieldPtr field_;
  std::vector<NestedChain> chains_;
  std::vector<PolyalphabeticCode> outers_;
  std::size_t dimension_ = 0;
  std::vector<std::vector<std::size_t>> inner_distance_;
  std::vector<std::size_t> outer_distance_;
  long designed_distance_ = 0;
  long capability_bound_ = 0;
};

}  // namespace whm
