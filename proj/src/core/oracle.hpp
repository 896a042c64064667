#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bigint.hpp"
#include "code.hpp"
#include "construct.hpp"
#include "metric.hpp"

namespace whm {

/// Enumeration caps. Exceeding one raises ExhaustionRefused.
struct OracleLimits {
  std::uint64_t codewords = std::uint64_t{1} << 20;
  std::uint64_t ambient = std::uint64_t{1} << 22;
};

long exact_min_weighted_distance(const LinearCode& code, const WeightedSpace& space, const OracleLimits& limits = {});

/// min over nonzero codewords of tau.
long exact_capability(const LinearCode& code, const WeightedSpace& space, const OracleLimits& limits = {});

/// True iff no nonzero codeword lies in DeltaB(t), i.e. has tau <= t - 1.
bool exhaustive_unique_correction_check(const LinearCode& code, const WeightedSpace& space, long t,
                                        const OracleLimits& limits = {});

/// Every vector v with wt_lambda(v) <= t, grouped by profile in lexicographic order.
std::vector<Vector> enumerate_ball(const WeightedSpace& space, long t, const OracleLimits& limits = {});

/// |{v in F_q^N : wt_lambda(v) <= t}| by walking the whole ambient space.
std::uint64_t ambient_ball_count(const WeightedSpace& space, long t, const OracleLimits& limits = {});

/// tau of v by trying every split r with r_i in {0, v_i}.
long brute_force_tau(const WeightedSpace& space, std::span<const Element> v);

/// { w_N(x - y) : x, y in B(t) } by explicit pairs, lexicographic order.
std::vector<WeightProfile> brute_force_diff_profiles(const WeightedSpace& space, long t, const OracleLimits& limits = {});

struct DecoderCheckReport {
  std::uint64_t total = 0;
  std::uint64_t failures = 0;
  std::uint64_t codewords = 0;
  std::uint64_t errors = 0;
  bool sampled = false;
  std::optional<Vector> counterexample_codeword;
  std::optional<Vector> counterexample_error;
};

/// Decodes c + e for every error with wt_lambda(e) <= t and every codeword
/// (a seeded sample of 100 codewords above 2^10 of them).
DecoderCheckReport exhaustive_decoder_check(const GccCode& gcc, long t, std::uint64_t seed = 1,
                                            const OracleLimits& limits = {});

}  // namespace whm
