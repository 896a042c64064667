#include <doctest.h>

#include <map>

#include "bounds.hpp"
#include "errors.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace whm;

namespace {

const WeightedSpace q2_space(2, {7, 7}, {1, 2});
const WeightedSpace q7_space(7, {7, 7}, {1, 2});

// Block-weight enumerator of a code: profile -> number of codewords.
std::map<WeightProfile, BigInt> enumerator(const LinearCode& code, const WeightedSpace& space) {
  std::map<WeightProfile, BigInt> a;
  code.for_each_codeword(1u << 20, [&](const Vector&, const Vector& c) { a[block_profile(space, c)] += 1; });
  return a;
}

// Every MacWilliams sum of a true enumerator is non-negative.
void check_macwilliams(const LinearCode& code, const WeightedSpace& space) {
  const auto a = enumerator(code, space);
  for (const auto& j : all_profiles(space)) {
    BigInt sum = 0;
    for (const auto& [i, count] : a) {
      BigInt prod = count;
      for (std::size_t l = 0; l < space.block_count(); ++l) prod *= krawtchouk(space.q(), space.blocks()[l], j[l], i[l]);
      sum += prod;
    }
    REQUIRE(sum >= 0);
    // The sum equals |C| times the dual's count at j, hence a multiple of |C|.
    const BigInt size = power(code.field().order(), code.dimension());
    REQUIRE(sum % size == 0);
  }
}

}  // namespace

TEST_CASE("Krawtchouk coefficients") {
  for (std::uint32_t q : {2u, 7u}) {
    for (int j = 0; j <= 7; ++j) CHECK(krawtchouk(q, 7, j, 0) == binomial(7, j) * power(q - 1, j));
    for (int i = 0; i <= 7; ++i) {
      BigInt sum = 0;
      for (int j = 0; j <= 7; ++j) sum += krawtchouk(q, 7, j, i);
      CHECK(sum == (i == 0 ? power(q, 7) : BigInt(0)));
    }
  }
  CHECK(krawtchouk(2, 7, 1, 1) == 5);
  CHECK(krawtchouk(2, 7, 1, 4) == -1);
  CHECK_THROWS_AS(krawtchouk(2, 7, 8, 0), ParameterError);
}

TEST_CASE("packing and covering examples") {
  CHECK(packing_bound(q2_space, 0) == 14);
  CHECK(packing_bound(q2_space, 2) == 8);
  CHECK(packing_bound(q7_space, 5) == 7);
  CHECK(covering_bound(q2_space, 0) == 14);
  CHECK(covering_bound(q2_space, 1) == 10);
  CHECK(covering_bound(q2_space, 2) == 6);
}

TEST_CASE("Singleton examples") {
  CHECK(singleton_bound(q2_space, 12) == 1);
  CHECK(singleton_bound(q2_space, 10) == 2);
  CHECK(singleton_bound(q2_space, 7) == 4);
  CHECK(singleton_bound(q2_space, 14) == 0);
  for (long k = 1; k <= 14; ++k) CHECK(singleton_bound(q2_space, k) == singleton_bound(q7_space, k));
  for (long t = 0; t <= 11; ++t) CHECK(singleton_k_for_t(q2_space, t) == singleton_k_for_t(q7_space, t));
  CHECK(singleton_k_for_t(q2_space, 11) == 0);
  CHECK_THROWS_AS(singleton_bound(q2_space, 0), ParameterError);
  CHECK_THROWS_AS(singleton_bound(q2_space, 15), ParameterError);
}

TEST_CASE("LP bound examples") {
  CHECK(lp_bound(q2_space, 0) == 14);
  CHECK(lp_bound(q2_space, 5) == 3);
  CHECK(lp_bound(q7_space, 7) == 3);
  const auto detail = lp_bound_detail(q2_space, 1);
  CHECK(detail.optimum == 2048);
  CHECK(detail.variables == 64);
  CHECK(detail.forbidden == 2);
}

TEST_CASE("Hamming-metric special case") {
  const WeightedSpace h(2, {7}, {1});
  CHECK(packing_bound(h, 1) == 4);
  CHECK(packing_bound(h, 2) == 2);
  CHECK(packing_bound(h, 3) == 1);
  CHECK(covering_bound(h, 1) == 3);  // 2^3 * |B(2)| = 232 >= 128
  CHECK(covering_bound(h, 2) == 1);
  CHECK(singleton_k_for_t(h, 1) == 5);
  CHECK(singleton_k_for_t(h, 3) == 1);
  CHECK(lp_bound(h, 1) == 4);  // Hamming code is perfect
}

TEST_CASE("capability interval") {
  const WeightedSpace s(2, {6, 3}, {1, 2});
  const auto iv = t_interval_from_d(s, 5);
  CHECK(iv.low == 2);
  CHECK(iv.high == 2);
  const WeightedSpace h(2, {9}, {1});
  for (long d = 1; d <= 9; ++d) {
    CHECK(t_interval_from_d(h, d).low == (d - 1) / 2);
    CHECK(t_interval_from_d(h, d).high == (d - 1) / 2);
  }
  for (long t = 0; t < 6; ++t) CHECK(t_interval_from_d(s, d_required_for_t(t)).low == t);
}

TEST_CASE("bound invariants on a small grid") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes = {
      {{3, 3}, {1, 2}}, {{2, 2, 2}, {1, 2, 3}}, {{4, 3}, {1, 3}}, {{5}, {1}}};
  for (std::uint32_t q : {2u, 3u}) {
    for (const auto& [blocks, lambda] : shapes) {
      const WeightedSpace s(q, blocks, lambda);
      const auto table = bound_table(s, 0, 8);
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        CHECK(r.covering <= r.packing);
        CHECK(r.covering <= r.singleton);
        CHECK(r.covering <= r.lp);
        if (i > 0) {
          const auto& p = table.rows[i - 1];
          CHECK(r.packing <= p.packing);
          CHECK(r.singleton <= p.singleton);
          CHECK(r.lp <= p.lp);
          CHECK(r.covering <= p.covering);
        }
      }
    }
  }
  CHECK(bound_table(q2_space, 3, 2).rows.empty());
}

TEST_CASE("MacWilliams sums of true codes are non-negative") {
  const FieldPtr f7 = make_prime_field(7);
  check_macwilliams(named_code(CodeFamily::reed_solomon, f7, 6, 3), WeightedSpace(7, {3, 3}, {1, 2}));
  const FieldPtr f2 = make_prime_field(2);
  // Example-4 code: repetition on the first block, full space on the second.
  const LinearCode two(f2, {{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  check_macwilliams(two, WeightedSpace(2, {3, 3}, {1, 2}));
}

TEST_CASE("true codes respect every bound") {
  const FieldPtr f7 = make_prime_field(7);
  const WeightedSpace s(7, {3, 3}, {1, 2});
  const auto rs = named_code(CodeFamily::reed_solomon, f7, 6, 3);
  const long t = exact_capability(rs, s);
  CHECK(t == 2);
  CHECK(singleton_bound(s, 3) == t);
  CHECK(packing_bound(s, t) >= 3);
  CHECK(lp_bound(s, t) >= 3);
  CHECK(singleton_k_for_t(s, t) >= 3);
}
