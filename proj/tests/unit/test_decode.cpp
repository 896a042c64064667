#include <doctest.h>

#include <random>

#include "decode.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "report.hpp"

using namespace whm;

namespace {

std::vector<Vector> split_symbols(const PolyalphabeticCode& a, const Vector& word) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.symbol_count(); ++i) {
    const auto s = a.symbol(word, i);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

void check_reliability_bounds(const GccCode& g, const DecodeReport& r) {
  for (std::size_t j = 0; j < r.levels.size(); ++j) {
    for (std::size_t l = 0; l < g.blocks(); ++l) {
      const auto& b = r.levels[j].blocks[l];
      REQUIRE(b.reliability >= 0);
      REQUIRE(b.reliability <= g.space().lambda()[l] * static_cast<long>(g.inner_distance(j, l)));
      if (b.failed) REQUIRE(b.reliability == 0);
    }
  }
}

}  // namespace

TEST_CASE("GMD on the Example-1 outer code") {
  const auto a = fixtures::poly_parity(2);
  const Vector c = a.encode(Vector{1, 0, 1});
  const auto symbols = split_symbols(a, c);

  const std::vector<long> alpha{2, 3, 4};
  auto out = gmd_decode(a, 2, symbols, alpha);
  REQUIRE(out.codeword);
  CHECK(*out.codeword == c);
  CHECK(out.correlation == 9);

  // One wrong symbol flagged with reliability zero: erased in the theta = 1 trial.
  for (std::size_t wrong = 0; wrong < 3; ++wrong) {
    auto corrupted = symbols;
    corrupted[wrong][0] ^= 1;
    std::vector<long> rel{1, 1, 1};
    rel[wrong] = 0;
    out = gmd_decode(a, 2, corrupted, rel);
    REQUIRE(out.codeword);
    CHECK(*out.codeword == c);
  }

  // Two confident wrong symbols: the transmitted word loses.
  auto corrupted = symbols;
  corrupted[1][0] ^= 1;
  corrupted[2][1] ^= 1;
  out = gmd_decode(a, 2, corrupted, std::vector<long>{1, 5, 5});
  CHECK(out.codeword != std::optional<Vector>(c));

  CHECK_THROWS_AS(gmd_decode(a, 2, std::vector<Vector>{{0}, {0, 0}}, std::vector<long>{1, 1}), ParameterError);
  CHECK_THROWS_AS(gmd_decode(a, 2, symbols, std::vector<long>{1, -1, 1}), ParameterError);
}

TEST_CASE("GMD with equal reliabilities matches bounded-distance decoding") {
  const auto mother = named_code(CodeFamily::reed_solomon, make_extension_field(2, 2), 4, 2);
  const auto a = poly_from_mother(mother, {2, 2, 2, 2});
  REQUIRE(a.min_block_distance() == 3);
  const std::vector<long> alpha(4, 1);
  for (const auto& m : test::all_vectors(2, 4)) {
    const Vector c = a.encode(m);
    for (std::size_t pos = 0; pos < 4; ++pos) {
      for (Element x = 0; x < 4; ++x) {
        auto symbols = split_symbols(a, c);
        symbols[pos] = {x & 1, x >> 1};
        const auto out = gmd_decode(a, 3, symbols, alpha);
        REQUIRE(out.codeword == std::optional<Vector>(c));
      }
    }
  }
}

TEST_CASE("clean words decode with maximal reliabilities") {
  for (const auto& g : {fixtures::three_block(), fixtures::two_block(), fixtures::two_level()}) {
    for (const auto& m : test::all_vectors(2, g.dimension())) {
      const Vector c = g.encode_flat(m);
      const auto r = gcc_decode(g, c);
      REQUIRE(r.ok());
      REQUIRE(r.codeword == c);
      for (std::size_t j = 0; j < g.levels(); ++j) {
        for (std::size_t l = 0; l < g.blocks(); ++l) {
          if (g.symbol_size(j, l) == 0) continue;
          REQUIRE(r.levels[j].blocks[l].reliability == g.space().lambda()[l] * static_cast<long>(g.inner_distance(j, l)));
        }
      }
    }
  }
}

TEST_CASE("two-block code corrects every error of weight one") {
  const auto g = fixtures::two_block();
  const auto errors = enumerate_ball(g.space(), 1);
  CHECK(errors.size() == 4);
  for (const auto& m : test::all_vectors(2, 4)) {
    const Vector c = g.encode_flat(m);
    for (const auto& e : errors) REQUIRE(gcc_decode(g, vec_add(g.field(), c, e)).codeword == c);
  }
}

TEST_CASE("two-level code corrects every error of weight two") {
  const auto g = fixtures::two_level();
  const auto errors = enumerate_ball(g.space(), 2);
  // Profiles (a, b) with a + 2b <= 2 on n = (6, 3): 1 + 6 + 15 + 3.
  CHECK(errors.size() == 25);
  for (const auto& m : test::all_vectors(2, 3)) {
    const Vector c = g.encode_flat(m);
    for (const auto& e : errors) {
      const auto r = gcc_decode(g, vec_add(g.field(), c, e));
      REQUIRE(r.codeword == c);
      check_reliability_bounds(g, r);
    }
  }
}

TEST_CASE("decoding guarantee on random constructions") {
  std::mt19937_64 rng(5150);
  int built = 0;
  while (built < 25) {
    auto g = fixtures::random_gcc(rng, 10);
    if (!g) continue;
    ++built;
    const auto report = exhaustive_decoder_check(*g, g->capability_bound(), 1);
    REQUIRE(report.failures == 0);
    REQUIRE(!report.sampled);
  }
}

TEST_CASE("arbitrary words: no crash, bounded reliabilities, failures reported") {
  std::mt19937_64 rng(8);
  const auto g = fixtures::two_level();
  bool saw_failure = false;
  for (int trial = 0; trial < 400; ++trial) {
    const Vector r = test::random_vector(rng, 2, g.length());
    const auto rep = gcc_decode(g, r);
    check_reliability_bounds(g, rep);
    REQUIRE(rep.codeword.size() == g.length());
    if (!rep.ok()) {
      saw_failure = true;
      CHECK(decode_report_json(rep).find("outer-failure-at-level-") != std::string::npos);
    }
  }
  CHECK(saw_failure);
  CHECK_THROWS_AS(gcc_decode(g, Vector(8, 0)), ParameterError);
  CHECK_THROWS_AS(gcc_decode(g, Vector(9, 2)), ParameterError);
}
