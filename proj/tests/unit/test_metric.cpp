#include <doctest.h>

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "helpers.hpp"
#include "metric.hpp"
#include "oracle.hpp"

using namespace whm;

TEST_CASE("space validation") {
  CHECK_THROWS_AS(WeightedSpace(4, {3}, {1}), ParameterError);
  CHECK_THROWS_AS(WeightedSpace(2, {3, 3}, {2, 1}), ParameterError);
  CHECK_THROWS_AS(WeightedSpace(2, {3, 3}, {1}), ParameterError);
  CHECK_THROWS_AS(WeightedSpace(2, {0, 3}, {1, 2}), ParameterError);
  CHECK_THROWS_AS(WeightedSpace(2, {3, 3}, {0, 2}), ParameterError);
  CHECK_THROWS_AS(WeightedSpace(2, {}, {}), ParameterError);
  const WeightedSpace s(2, {3, 4}, {1, 2});
  CHECK(s.length() == 7);
  CHECK(s.offset(1) == 3);
  CHECK_THROWS_AS(s.check_profile({4, 0}), ParameterError);
  CHECK_THROWS_AS(s.check_profile({1}), ParameterError);
}

TEST_CASE("block profiles and weights") {
  const WeightedSpace s33(2, {3, 3}, {1, 2});
  CHECK(block_profile(s33, Vector{1, 1, 1, 0, 0, 0}) == WeightProfile{3, 0});
  CHECK(block_profile(s33, Vector(6, 0)) == WeightProfile{0, 0});
  const WeightedSpace s6(2, {6}, {1});
  CHECK(block_profile(s6, Vector{1, 0, 1, 0, 0, 1}) == WeightProfile{3});

  const WeightedSpace s333(2, {3, 3, 3}, {1, 2, 3});
  CHECK(weighted_weight(s333, WeightProfile{3, 0, 0}) == 3);
  CHECK(weighted_weight(s333, WeightProfile{0, 2, 0}) == 4);
  CHECK(weighted_weight(s333, WeightProfile{0, 0, 1}) == 3);
  CHECK(weighted_weight(s33, WeightProfile{2, 3}) == 8);
  CHECK(weighted_weight(s6, WeightProfile{5}) == 5);
  CHECK(weighted_weight(s33, Vector{0, 1, 0, 1, 1, 0}) == 5);

  CHECK(profile_leq({1, 0}, {2, 1}));
  CHECK(!profile_leq({2, 0}, {1, 3}));
  CHECK(profile_leq({2, 1}, {2, 1}));
}

TEST_CASE("tau examples") {
  const WeightedSpace s33(2, {3, 3}, {1, 2});
  CHECK(tau_of_profile(s33, {3, 0}) == 1);
  CHECK(tau_of_profile(s33, {0, 1}) == 1);
  CHECK(tau_of_profile(s33, {0, 0}) == -1);
  const WeightedSpace s77(2, {7, 7}, {1, 2});
  CHECK(tau_of_profile(s77, {7, 1}) == 4);
  CHECK(tau_of_profile(s77, {1, 0}) == 0);
}

TEST_CASE("tau DP agrees with split enumeration") {
  std::mt19937_64 rng(20240601);
  const std::vector<std::uint32_t> qs{2, 3, 7};
  int cases = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::uint32_t q = qs[trial % 3];
    std::uniform_int_distribution<int> mdist(1, 4), ndist(1, 4), ldist(1, 5);
    const int m = mdist(rng);
    std::vector<int> blocks, lambda;
    int total = 0;
    for (int l = 0; l < m; ++l) {
      blocks.push_back(std::min(ndist(rng), 12 - total - (m - l - 1)));
      total += blocks.back();
      lambda.push_back(ldist(rng));
    }
    std::sort(lambda.begin(), lambda.end());
    const WeightedSpace space(q, blocks, lambda);
    REQUIRE(space.length() <= 12);
    const Vector v = test::random_vector(rng, q, static_cast<std::size_t>(space.length()));
    REQUIRE(tau_of_profile(space, block_profile(space, v)) == brute_force_tau(space, v));
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("tau bracketing") {
  const WeightedSpace s(3, {2, 3, 2}, {1, 2, 4});
  for (const auto& p : all_profiles(s)) {
    const long w = weighted_weight(s, p);
    if (w == 0) continue;
    const long tau = tau_of_profile(s, p);
    CHECK((w - 1) / 2 <= tau);
    CHECK(tau <= (w + s.max_lambda()) / 2 - 1);
  }
}

TEST_CASE("tau is monotone in the profile order") {
  const WeightedSpace s(2, {3, 3, 3}, {1, 2, 3});
  const auto all = all_profiles(s);
  CHECK(all.size() == 64);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (!profile_leq(a, b)) continue;
      REQUIRE(weighted_weight(s, a) <= weighted_weight(s, b));
      REQUIRE(tau_of_profile(s, a) <= tau_of_profile(s, b));
    }
  }
}

TEST_CASE("ball profiles") {
  const WeightedSpace s(2, {7, 7}, {1, 2});
  CHECK(ball_profiles(s, 0) == std::vector<WeightProfile>{{0, 0}});
  CHECK(ball_profiles(s, 1) == std::vector<WeightProfile>{{0, 0}, {1, 0}});
  CHECK(ball_profiles(s, 2) == std::vector<WeightProfile>{{0, 0}, {0, 1}, {1, 0}, {2, 0}});
  CHECK(diff_ball_profiles(s, 0) == std::vector<WeightProfile>{{0, 0}});
  CHECK(diff_ball_profiles(s, 1) == std::vector<WeightProfile>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(diff_ball_profiles(s, 2) ==
        std::vector<WeightProfile>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {4, 0}});
  CHECK(ball_size(s, 0) == 1);
  CHECK(ball_size(s, 1) == 8);
  CHECK(diff_ball_size(s, 1) == 29);
  CHECK(profile_to_string({3, 0, 1}) == "3,0,1");
}

TEST_CASE("ball size equals ambient enumeration") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes = {
      {{5}, {1}}, {{3, 3}, {1, 2}}, {{2, 2, 2}, {1, 1, 3}}, {{4, 6}, {1, 3}}, {{3, 3, 4}, {1, 2, 3}}};
  for (std::uint32_t q : {2u, 3u}) {
    for (const auto& [blocks, lambda] : shapes) {
      const WeightedSpace s(q, blocks, lambda);
      if (q == 3 && s.length() > 9) continue;  // 3^10 still fine but slow in debug builds
      long total = 0;
      for (std::size_t l = 0; l < blocks.size(); ++l) total += blocks[l] * lambda[l];
      for (long t = 0; t <= total; ++t) {
        REQUIRE(ball_size(s, t) == BigInt(std::to_string(ambient_ball_count(s, t))));
      }
    }
  }
}

TEST_CASE("Hamming special case of the ball") {
  const WeightedSpace s(3, {8}, {1});
  BigInt expected = 0;
  for (int t = 0; t <= 8; ++t) {
    expected += binomial(8, static_cast<unsigned long>(t)) * power(2, static_cast<unsigned long>(t));
    CHECK(ball_size(s, t) == expected);
  }
}

TEST_CASE("difference set equals pair enumeration") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes = {
      {{3, 3}, {1, 2}}, {{2, 2, 2}, {1, 2, 3}}, {{4, 4}, {1, 3}}, {{8}, {1}}, {{2, 3}, {2, 2}}};
  for (std::uint32_t q : {2u, 3u, 7u}) {
    for (const auto& [blocks, lambda] : shapes) {
      const WeightedSpace s(q, blocks, lambda);
      long total = 0;
      for (std::size_t l = 0; l < blocks.size(); ++l) total += blocks[l] * lambda[l];
      for (long t = 0; t <= total; ++t) {
        if (ball_size(s, t) > 600) break;
        const auto expected = brute_force_diff_profiles(s, t);
        REQUIRE(diff_ball_profiles(s, t) == expected);
        BigInt volume = 0;
        for (const auto& p : expected) volume += profile_volume(s, p);
        REQUIRE(diff_ball_size(s, t) == volume);
      }
    }
  }
}
