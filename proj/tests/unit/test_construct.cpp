#include <doctest.h>

#include <random>
#include <set>

#include "bounds.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "linalg.hpp"
#include "oracle.hpp"

using namespace whm;

TEST_CASE("polyalphabetic codes from a mother code") {
  for (std::uint32_t q : {2u, 7u}) {
    const auto a = fixtures::poly_parity(q);
    CHECK(a.dimension() == 3);
    CHECK(a.total_length() == 6);
    CHECK(a.min_block_distance() == 2);
  }
  const auto f4 = make_extension_field(2, 2);
  const auto mother = named_code(CodeFamily::parity, f4, 3);
  const auto equal = poly_from_mother(mother, {2, 2, 2});
  CHECK(equal.dimension() == 4);
  CHECK(equal.min_block_distance() == 2);
  const auto shrunk = poly_from_mother(mother, {1, 2, 2});
  CHECK(shrunk.dimension() == 3);
  CHECK(shrunk.min_block_distance() == 2);

  CHECK_THROWS_AS(poly_from_mother(mother, {2, 1, 3}), ParameterError);  // unsorted
  CHECK_THROWS_AS(poly_from_mother(mother, {1, 3, 3}), ParameterError);  // wrong size at k
  CHECK_THROWS_AS(poly_from_mother(mother, {1, 2}), ParameterError);

  const auto any = poly_from_mother_any_order(mother, {3, 1, 2});
  CHECK(any.dimension() == 3);
  CHECK(any.symbol_sizes() == std::vector<int>{3, 1, 2});
  CHECK(any.min_block_distance() >= 2);

  // Block distance never drops below the mother's distance.
  const auto f8 = make_extension_field(2, 3);
  const auto rs = named_code(CodeFamily::reed_solomon, f8, 5, 3);
  const auto derived = poly_from_mother(rs, {1, 2, 3, 3, 4});
  CHECK(derived.dimension() == 6);
  CHECK(derived.min_block_distance() >= rs.min_distance());
  const auto f9 = make_extension_field(3, 2);
  const auto rep = named_code(CodeFamily::repetition, f9, 4);
  CHECK(poly_from_mother(rep, {2, 2, 3, 3}).min_block_distance() >= 4);
}

TEST_CASE("worked examples") {
  const auto three = fixtures::three_block();
  CHECK(three.length() == 9);
  CHECK(three.dimension() == 3);
  CHECK(three.designed_distance() == 6);

  const auto two = fixtures::two_block();
  CHECK(two.length() == 6);
  CHECK(two.dimension() == 4);
  CHECK(two.designed_distance() == 2);
  CHECK(two.capability_bound() == 1);

  const auto lvl = fixtures::two_level();
  CHECK(lvl.length() == 9);
  CHECK(lvl.dimension() == 3);
  CHECK(lvl.designed_distance() == 5);
  CHECK(lvl.capability_bound() == 2);

  const auto hff = fixtures::hamming_full_full();
  CHECK(hff.length() == 21);
  CHECK(hff.dimension() == 18);
  CHECK(hff.capability_bound() == 1);
}

TEST_CASE("capability bound of unit-weight full spaces") {
  const FieldPtr f = make_prime_field(2);
  std::vector<NestedChain> chains{NestedChain({named_code(CodeFamily::full, f, 2)}),
                                  NestedChain({named_code(CodeFamily::full, f, 2)})};
  const GccCode g(WeightedSpace(2, {2, 2}, {1, 1}), std::move(chains), {full_poly_code(f, {2, 2})});
  CHECK(g.capability_bound() == 0);
  CHECK(g.designed_distance() == 1);
}

TEST_CASE("assembly errors") {
  const FieldPtr f = make_prime_field(2);
  const WeightedSpace s(2, {3, 3}, {1, 2});
  auto rep = NestedChain({named_code(CodeFamily::repetition, f, 3)});
  auto full = NestedChain({named_code(CodeFamily::full, f, 3)});
  CHECK_THROWS_AS(GccCode(s, {rep}, {full_poly_code(f, {1, 3})}), ParameterError);
  CHECK_THROWS_WITH(GccCode(s, {rep, full}, {full_poly_code(f, {2, 3})}), doctest::Contains("quotient dimension"));
  CHECK_THROWS_AS(GccCode(s, {rep, full}, {}), ParameterError);
  auto short_chain = NestedChain({named_code(CodeFamily::full, f, 2)});
  CHECK_THROWS_AS(GccCode(s, {rep, short_chain}, {full_poly_code(f, {1, 2})}), ParameterError);
  const auto two = fixtures::two_block();
  CHECK_THROWS_AS(two.encode({Vector{1}}), ParameterError);
  CHECK_THROWS_AS(two.encode_flat(Vector{1, 0}), ParameterError);
}

TEST_CASE("encoding") {
  const auto two = fixtures::two_block();
  CHECK(two.encode({Vector(4, 0)}) == Vector(6, 0));
  std::set<Vector> seen;
  for (const auto& m : test::all_vectors(2, 4)) {
    const Vector c = two.encode_flat(m);
    CHECK(seen.insert(c).second);
    if (c != Vector(6, 0)) CHECK(weighted_weight(two.space(), c) >= 2);
  }
  CHECK(seen.size() == 16);

  const auto lvl = fixtures::two_level();
  CHECK(lvl.encode({Vector{0}, Vector{0, 0}}) == Vector(9, 0));
  const auto gen = lvl.as_linear_code();
  CHECK(gen.dimension() == 3);
}

TEST_CASE("designed quantities are sound") {
  std::mt19937_64 rng(99);
  int checked = 0;
  std::vector<GccCode> codes{fixtures::three_block(), fixtures::two_block(), fixtures::two_level(), fixtures::three_block(3)};
  while (codes.size() < 40) {
    if (auto g = fixtures::random_gcc(rng, 16)) codes.push_back(std::move(*g));
  }
  for (const auto& g : codes) {
    const LinearCode c = g.as_linear_code();
    REQUIRE(c.dimension() == g.dimension());
    Rows rows;
    for (std::size_t i = 0; i < g.dimension(); ++i) {
      Vector e(g.dimension(), 0);
      e[i] = 1;
      rows.push_back(g.encode_flat(e));
    }
    REQUIRE(rank(g.field(), rows, g.length()) == g.dimension());
    const long d = exact_min_weighted_distance(c, g.space());
    const long t = exact_capability(c, g.space());
    REQUIRE(g.designed_distance() <= d);
    REQUIRE(g.capability_bound() <= t);
    const auto iv = t_interval_from_d(g.space(), d);
    REQUIRE(iv.low <= t);
    REQUIRE(t <= iv.high);
    ++checked;
  }
  CHECK(checked == 40);
}
