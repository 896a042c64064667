#include "metric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "errors.hpp"

namespace whm {

WeightedSpace::WeightedSpace(std::uint32_t q, std::vector<int> blocks, std::vector<int> lambda)
    : q_(q), blocks_(std::move(blocks)), lambda_(std::move(lambda)) {
  if (q < 2 || smallest_factor(q) != q) throw ParameterError("field order q=" + std::to_string(q) + " is not prime");
  if (blocks_.empty()) throw ParameterError("at least one block is required");
  if (blocks_.size() != lambda_.size()) {
    throw ParameterError("blocks and lambda must have the same length (" + std::to_string(blocks_.size()) + " vs " +
                         std::to_string(lambda_.size()) + ")");
  }
  for (std::size_t l = 0; l < blocks_.size(); ++l) {
    if (blocks_[l] < 1) throw ParameterError("block lengths must be positive");
    if (lambda_[l] < 1) throw ParameterError("scaling coefficients must be positive");
    if (l > 0 && lambda_[l] < lambda_[l - 1]) throw ParameterError("scaling coefficients must be sorted non-decreasing");
  }
  offsets_.reserve(blocks_.size());
  for (int n : blocks_) {
    offsets_.push_back(length_);
    length_ += n;
  }
}

void WeightedSpace::check_profile(const WeightProfile& p) const {
  if (p.size() != blocks_.size()) throw ParameterError("profile has " + std::to_string(p.size()) + " entries, expected " + std::to_string(blocks_.size()));
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (p[l] < 0 || p[l] > blocks_[l]) throw ParameterError("profile entry " + std::to_string(l + 1) + " outside 0.." + std::to_string(blocks_[l]));
  }
}

std::string WeightedSpace::describe() const {
  std::ostringstream os;
  os << "q=" << q_ << " n=(" << profile_to_string(blocks_) << ") lambda=(" << profile_to_string(lambda_) << ")";
  return os.str();
}

WeightProfile block_profile(const WeightedSpace& space, std::span<const Element> v) {
  if (static_cast<int>(v.size()) != space.length()) {
    throw ParameterError("vector length " + std::to_string(v.size()) + " does not match N=" + std::to_string(space.length()));
  }
  WeightProfile p(space.block_count(), 0);
  for (std::size_t l = 0; l < space.block_count(); ++l) {
    const auto block = v.subspan(space.offset(l), space.blocks()[l]);
    p[l] = static_cast<int>(hamming_weight(block));
  }
  return p;
}

long weighted_weight(const WeightedSpace& space, const WeightProfile& profile) {
  long w = 0;
  for (std::size_t l = 0; l < profile.size(); ++l) w += static_cast<long>(space.lambda()[l]) * profile[l];
  return w;
}

long weighted_weight(const WeightedSpace& space, std::span<const Element> v) {
  return weighted_weight(space, block_profile(space, v));
}

bool profile_leq(const WeightProfile& a, const WeightProfile& b) {
  if (a.size() != b.size()) throw ParameterError("profiles of different spaces");
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l] > b[l]) return false;
  }
  return true;
}

long tau_of_profile(const WeightedSpace& space, const WeightProfile& profile) {
  space.check_profile(profile);
  const long total = weighted_weight(space, profile);
  // reachable[s]: some r with r_i in {0, v_i} has wt(r) = s.
  std::vector<char> reachable(total + 1, 0);
  reachable[0] = 1;
  long reach = 0;
  for (std::size_t l = 0; l < profile.size(); ++l) {
    const long lam = space.lambda()[l];
    const int w = profile[l];
    if (w == 0) continue;
    std::vector<char> next(total + 1, 0);
    for (long s = 0; s <= reach; ++s) {
      if (!reachable[s]) continue;
      for (int a = 0; a <= w; ++a) next[s + lam * a] = 1;
    }
    reach += lam * w;
    reachable.swap(next);
  }
  long best = total;
  for (long s = 0; s <= total; ++s) {
    if (reachable[s]) best = std::min(best, std::max(s, total - s));
  }
  return best - 1;
}

namespace {

// Depth-first walk over profiles with weighted weight <= budget, in lexicographic order.
void walk_profiles(const WeightedSpace& space, long budget, const std::function<void(const WeightProfile&)>& visit) {
  WeightProfile p(space.block_count(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t l, long left) {
    if (l == space.block_count()) {
      visit(p);
      return;
    }
    const long lam = space.lambda()[l];
    for (int a = 0; a <= space.blocks()[l] && lam * a <= left; ++a) {
      p[l] = a;
      rec(l + 1, left - lam * a);
    }
    p[l] = 0;
  };
  rec(0, budget);
}

}  // namespace

std::vector<WeightProfile> ball_profiles(const WeightedSpace& space, long t) {
  if (t < 0) throw ParameterError("radius must be non-negative");
  std::vector<WeightProfile> out;
  walk_profiles(space, t, [&](const WeightProfile& p) { out.push_back(p); });
  return out;
}

std::vector<WeightProfile> diff_ball_profiles(const WeightedSpace& space, long t) {
  if (t < 0) throw ParameterError("radius must be non-negative");
  std::vector<WeightProfile> out;
  // tau(p) <= t-1 forces wt(p) <= 2t.
  walk_profiles(space, 2 * t, [&](const WeightProfile& p) {
    if (tau_of_profile(space, p) <= t - 1) out.push_back(p);
  });
  return out;
}

std::vector<WeightProfile> all_profiles(const WeightedSpace& space) {
  long total = 0;
  for (std::size_t l = 0; l < space.block_count(); ++l) total += static_cast<long>(space.lambda()[l]) * space.blocks()[l];
  std::vector<WeightProfile> out;
  walk_profiles(space, total, [&](const WeightProfile& p) { out.push_back(p); });
  return out;
}

BigInt profile_volume(const WeightedSpace& space, const WeightProfile& profile) {
  BigInt v = 1;
  for (std::size_t l = 0; l < profile.size(); ++l) {
    v *= binomial(space.blocks()[l], profile[l]) * power(space.q() - 1, profile[l]);
  }
  return v;
}

BigInt ball_size(const WeightedSpace& space, long t) {
  BigInt s = 0;
  for (const auto& p : ball_profiles(space, t)) s += profile_volume(space, p);
  return s;
}

BigInt diff_ball_size(const WeightedSpace& space, long t) {
  BigInt s = 0;
  for (const auto& p : diff_ball_profiles(space, t)) s += profile_volume(space, p);
  return s;
}

std::string profile_to_string(const WeightProfile& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace whm
