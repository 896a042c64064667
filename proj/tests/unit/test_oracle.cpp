#include <doctest.h>

#include <random>

#include "bounds.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace whm;

TEST_CASE("exact distance and capability of the worked examples") {
  const auto two = fixtures::two_block();
  const auto c4 = two.as_linear_code();
  CHECK(exact_min_weighted_distance(c4, two.space()) == 2);
  CHECK(exact_capability(c4, two.space()) == 1);

  const auto three = fixtures::three_block();
  const long d2 = exact_min_weighted_distance(three.as_linear_code(), three.space());
  CHECK(d2 >= 6);
  CHECK(three.designed_distance() == 6);

  const auto lvl = fixtures::two_level();
  CHECK(exact_min_weighted_distance(lvl.as_linear_code(), lvl.space()) == 5);
  CHECK(exact_capability(lvl.as_linear_code(), lvl.space()) == 2);

  const WeightedSpace s(7, {3, 3}, {1, 2});
  const auto rs = named_code(CodeFamily::reed_solomon, make_prime_field(7), 6, 3);
  CHECK(exact_capability(rs, s) == 2);
  CHECK(singleton_bound(s, 3) == 2);
}

TEST_CASE("unique correction check") {
  const auto two = fixtures::two_block();
  const auto c4 = two.as_linear_code();
  CHECK(exhaustive_unique_correction_check(c4, two.space(), 0));
  CHECK(exhaustive_unique_correction_check(c4, two.space(), 1));
  CHECK(!exhaustive_unique_correction_check(c4, two.space(), 2));

  // One-dimensional codes pass exactly up to tau of their generator.
  const WeightedSpace s(3, {2, 3}, {1, 3});
  const FieldPtr f3 = make_prime_field(3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Vector v = test::random_vector(rng, 3, 5);
    if (hamming_weight(v) == 0) continue;
    const LinearCode c(f3, {v});
    const long tau = tau_of_profile(s, block_profile(s, v));
    for (long t = 0; t <= tau + 2; ++t) CHECK(exhaustive_unique_correction_check(c, s, t) == (t <= tau));
  }
}

TEST_CASE("capability is the largest passing radius, bracketed by the distance") {
  std::mt19937_64 rng(17);
  int count = 0;
  while (count < 30) {
    auto g = fixtures::random_gcc(rng, 12);
    if (!g) continue;
    ++count;
    const auto c = g->as_linear_code();
    const long d = exact_min_weighted_distance(c, g->space());
    const long t = exact_capability(c, g->space());
    CHECK(exhaustive_unique_correction_check(c, g->space(), t));
    CHECK(!exhaustive_unique_correction_check(c, g->space(), t + 1));
    CHECK((d - 1) / 2 <= t);
    CHECK(t <= (d + g->space().max_lambda()) / 2 - 1);
  }
}

TEST_CASE("decoder check reports") {
  const auto two = fixtures::two_block();
  auto r = exhaustive_decoder_check(two, 1);
  CHECK(r.total == 64);
  CHECK(r.failures == 0);
  CHECK(r.codewords == 16);
  CHECK(!r.counterexample_codeword);

  r = exhaustive_decoder_check(two, 2);
  CHECK(r.failures > 0);
  REQUIRE(r.counterexample_codeword);
  CHECK(weighted_weight(two.space(), *r.counterexample_error) <= 2);

  const auto lvl = fixtures::two_level();
  CHECK(exhaustive_decoder_check(lvl, 2).failures == 0);

  // Above 2^10 codewords a seeded sample of 100 is drawn.
  const auto hff = fixtures::hamming_full_full();
  const auto a = exhaustive_decoder_check(hff, 1, 7);
  const auto b = exhaustive_decoder_check(hff, 1, 7);
  CHECK(a.sampled);
  CHECK(a.codewords == 100);
  CHECK(a.failures == 0);
  CHECK(a.total == b.total);
}

TEST_CASE("enumeration limits refuse") {
  OracleLimits tight;
  tight.codewords = 8;
  tight.ambient = 16;
  const auto two = fixtures::two_block();
  CHECK_THROWS_AS(exact_capability(two.as_linear_code(), two.space(), tight), ExhaustionRefused);
  CHECK_THROWS_AS(ambient_ball_count(two.space(), 1, tight), ExhaustionRefused);
  CHECK_THROWS_AS(enumerate_ball(WeightedSpace(2, {20}, {1}), 5, tight), ExhaustionRefused);
  CHECK_THROWS_AS(exhaustive_decoder_check(two, 3, 1, tight), ExhaustionRefused);
}

TEST_CASE("ball enumeration") {
  const WeightedSpace s(3, {2, 2}, {1, 2});
  for (long t = 0; t <= 6; ++t) {
    const auto ball = enumerate_ball(s, t);
    CHECK(BigInt(std::to_string(ball.size())) == ball_size(s, t));
    for (const auto& v : ball) CHECK(weighted_weight(s, v) <= t);
  }
}
