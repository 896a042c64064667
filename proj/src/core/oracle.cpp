#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <utility>

#include "decode.hpp"
#include "errors.hpp"

namespace whm {

long exact_min_weighted_distance(const LinearCode& code, const WeightedSpace& space, const OracleLimits& limits) {
  if (static_cast<int>(code.length()) != space.length()) throw ParameterError("code length does not match the space");
  long best = std::numeric_limits<long>::max();
  bool first = true;
  code.for_each_codeword(limits.codewords, [&](const Vector&, const Vector& c) {
    if (std::exchange(first, false)) return;
    best = std::min(best, weighted_weight(space, c));
  });
  return best;
}

long exact_capability(const LinearCode& code, const WeightedSpace& space, const OracleLimits& limits) {
  if (static_cast<int>(code.length()) != space.length()) throw ParameterError("code length does not match the space");
  long best = std::numeric_limits<long>::max();
  bool first = true;
  code.for_each_codeword(limits.codewords, [&](const Vector&, const Vector& c) {
    if (std::exchange(first, false)) return;
    best = std::min(best, tau_of_profile(space, block_profile(space, c)));
  });
  return best;
}

bool exhaustive_unique_correction_check(const LinearCode& code, const WeightedSpace& space, long t,
                                        const OracleLimits& limits) {
  if (static_cast<int>(code.length()) != space.length()) throw ParameterError("code length does not match the space");
  bool ok = true;
  bool first = true;
  code.for_each_codeword(limits.codewords, [&](const Vector&, const Vector& c) {
    if (std::exchange(first, false)) return;
    if (ok && tau_of_profile(space, block_profile(space, c)) <= t - 1) ok = false;
  });
  return ok;
}

namespace {

// Calls fn(v) for every vector with the given block profile.
template <class Fn>
void for_each_with_profile(const WeightedSpace& space, const WeightProfile& p, Fn&& fn) {
  const std::size_t m = space.block_count();
  const Element top = space.q() - 1;
  std::vector<std::vector<std::size_t>> support(m);
  std::vector<Vector> values(m);
  for (std::size_t l = 0; l < m; ++l) {
    for (int i = 0; i < p[l]; ++i) support[l].push_back(static_cast<std::size_t>(i));
    values[l].assign(static_cast<std::size_t>(p[l]), 1);
  }
  auto next_values = [&](std::size_t l) {
    std::size_t i = values[l].size();
    while (i > 0 && values[l][i - 1] == top) values[l][--i] = 1;
    if (i == 0) return false;
    ++values[l][i - 1];
    return true;
  };
  auto next_support = [&](std::size_t l) {
    auto& s = support[l];
    const std::size_t w = s.size();
    const std::size_t n = static_cast<std::size_t>(space.blocks()[l]);
    std::size_t i = w;
    while (i > 0 && s[i - 1] == n - w + i - 1) --i;
    if (i == 0) {
      for (std::size_t j = 0; j < w; ++j) s[j] = j;
      return false;
    }
    ++s[i - 1];
    for (std::size_t j = i; j < w; ++j) s[j] = s[j - 1] + 1;
    return true;
  };
  Vector v(static_cast<std::size_t>(space.length()), 0);
  while (true) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t l = 0; l < m; ++l) {
      for (std::size_t i = 0; i < support[l].size(); ++i) v[space.offset(l) + support[l][i]] = values[l][i];
    }
    fn(static_cast<const Vector&>(v));
    // Advance: values of the last block fastest, then its support, then earlier blocks.
    std::size_t l = m;
    bool advanced = false;
    while (l > 0 && !advanced) {
      --l;
      if (next_values(l)) {
        advanced = true;
      } else if (next_support(l)) {
        advanced = true;
      }
    }
    if (!advanced) return;
  }
}

}  // namespace

std::vector<Vector> enumerate_ball(const WeightedSpace& space, long t, const OracleLimits& limits) {
  const BigInt size = ball_size(space, t);
  if (size > BigInt(std::to_string(limits.ambient))) {
    throw ExhaustionRefused("ball enumeration refused: " + size.get_str() + " vectors exceed the limit of " +
                            std::to_string(limits.ambient));
  }
  std::vector<Vector> out;
  for (const auto& p : ball_profiles(space, t)) {
    for_each_with_profile(space, p, [&](const Vector& v) { out.push_back(v); });
  }
  return out;
}

std::uint64_t ambient_ball_count(const WeightedSpace& space, long t, const OracleLimits& limits) {
  const FieldPtr f = make_prime_field(space.q());
  const std::size_t n = static_cast<std::size_t>(space.length());
  checked_enumeration(space.q(), n, limits.ambient, "ambient enumeration");
  Rows identity(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
  std::uint64_t count = 0;
  for_each_combination(*f, identity, n, [&](const Vector&, const Vector& v) {
    if (weighted_weight(space, v) <= t) ++count;
  });
  return count;
}

long brute_force_tau(const WeightedSpace& space, std::span<const Element> v) {
  const WeightProfile p = block_profile(space, v);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) support.push_back(i);
  }
  if (support.size() > 30) throw ExhaustionRefused("split enumeration refused: support larger than 30");
  // Coordinate i belongs to the block whose offset range contains it.
  std::vector<long> lam(v.size());
  for (std::size_t l = 0; l < space.block_count(); ++l) {
    for (int i = 0; i < space.blocks()[l]; ++i) lam[space.offset(l) + i] = space.lambda()[l];
  }
  const long total = weighted_weight(space, p);
  long best = std::numeric_limits<long>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << support.size()); ++mask) {
    long in = 0;
    for (std::size_t b = 0; b < support.size(); ++b) {
      if (mask >> b & 1) in += lam[support[b]];
    }
    best = std::min(best, std::max(in, total - in));
  }
  return best - 1;
}

std::vector<WeightProfile> brute_force_diff_profiles(const WeightedSpace& space, long t, const OracleLimits& limits) {
  const FieldPtr f = make_prime_field(space.q());
  const auto ball = enumerate_ball(space, t, limits);
  const BigInt pairs = BigInt(std::to_string(ball.size())) * BigInt(std::to_string(ball.size()));
  if (pairs > BigInt(std::to_string(limits.ambient)) * 16) {
    throw ExhaustionRefused("pair enumeration refused: " + pairs.get_str() + " pairs");
  }
  std::set<WeightProfile> seen;
  for (const auto& x : ball) {
    for (const auto& y : ball) seen.insert(block_profile(space, vec_sub(*f, x, y)));
  }
  return {seen.begin(), seen.end()};
}

DecoderCheckReport exhaustive_decoder_check(const GccCode& gcc, long t, std::uint64_t seed, const OracleLimits& limits) {
  const auto errors = enumerate_ball(gcc.space(), t, limits);
  DecoderCheckReport report;
  report.errors = errors.size();
  const Field& f = gcc.field();

  std::vector<Vector> messages;
  const std::uint64_t exhaustive_cap = std::uint64_t{1} << 10;
  bool small = true;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < gcc.dimension(); ++i) {
    count *= f.order();
    if (count > exhaustive_cap) {
      small = false;
      break;
    }
  }
  if (small) {
    Rows identity(gcc.dimension(), Vector(gcc.dimension(), 0));
    for (std::size_t i = 0; i < gcc.dimension(); ++i) identity[i][i] = 1;
    for_each_combination(f, identity, gcc.dimension(), [&](const Vector& m, const Vector&) { messages.push_back(m); });
  } else {
    report.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> digit(0, f.order() - 1);
    for (int s = 0; s < 100; ++s) {
      Vector m(gcc.dimension());
      for (auto& x : m) x = digit(rng);
      messages.push_back(std::move(m));
    }
  }
  const std::uint64_t work = static_cast<std::uint64_t>(messages.size()) * errors.size();
  if (work > limits.ambient) {
    throw ExhaustionRefused("decoder check refused: " + std::to_string(work) + " decodings exceed the limit of " +
                            std::to_string(limits.ambient));
  }
  report.codewords = messages.size();
  for (const auto& m : messages) {
    const Vector c = gcc.encode_flat(m);
    for (const auto& e : errors) {
      ++report.total;
      const DecodeReport r = gcc_decode(gcc, vec_add(f, c, e));
      if (r.codeword != c) {
        if (report.failures++ == 0) {
          report.counterexample_codeword = c;
          report.counterexample_error = e;
        }
      }
    }
  }
  return report;
}

}  // namespace whm
