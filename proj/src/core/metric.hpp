#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "field.hpp"

namespace whm {

/// Block weight w_N(v): Hamming weight of each block.
using WeightProfile = std::vector<int>;

/// Ambient weighted-Hamming space F_q^N with N = sum of the block lengths.
/// Scaling coefficients must be sorted non-decreasing.
class WeightedSpace {
 public:
  WeightedSpace(std::uint32_t q, std::vector<int> blocks, std::vector<int> lambda);

  std::uint32_t q() const { return q_; }
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<int>& lambda() const { return lambda_; }
  std::size_t block_count() const { return blocks_.size(); }
  int length() const { return length_; }
  /// First coordinate of block l.
  int offset(std::size_t l) const { return offsets_[l]; }
  int max_lambda() const { return lambda_.back(); }

  /// Throws ParameterError unless profile has one entry per block within 0..n_l.
  void check_profile(const WeightProfile& p) const;

  std::string describe() const;

 private:
  std::uint32_t q_;
  std::vector<int> blocks_;
  std::vector<int> lambda_;
  std::vector<int> offsets_;
  int length_ = 0;
};

WeightProfile block_profile(const WeightedSpace& space, std::span<const Element> v);

long weighted_weight(const WeightedSpace& space, const WeightProfile& profile);
long weighted_weight(const WeightedSpace& space, std::span<const Element> v);

/// Componentwise partial order a <= b.
bool profile_leq(const WeightProfile& a, const WeightProfile& b);

/// tau_lambda of any vector with this block weight:
/// min over splits v = r + (v - r) of max(wt(r), wt(v - r)), minus one.
/// The zero profile gives -1.
long tau_of_profile(const WeightedSpace& space, const WeightProfile& profile);

/// Block weights attained by the weighted ball B(t), lexicographic order.
std::vector<WeightProfile> ball_profiles(const WeightedSpace& space, long t);

/// Block weights attained by the difference set of B(t): exactly the
/// profiles with tau <= t - 1, plus the zero profile. t = 0 gives {0}.
std::vector<WeightProfile> diff_ball_profiles(const WeightedSpace& space, long t);

/// Every profile of the space, lexicographic order.
std::vector<WeightProfile> all_profiles(const WeightedSpace& space);

/// Number of vectors with the given block weight.
BigInt profile_volume(const WeightedSpace& space, const WeightProfile& profile);

BigInt ball_size(const WeightedSpace& space, long t);
BigInt diff_ball_size(const WeightedSpace& space, long t);

std::string profile_to_string(const WeightProfile& p);

}  // namespace whm
