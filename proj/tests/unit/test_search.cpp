#include <doctest.h>

#include <algorithm>

#include "errors.hpp"
#include "search.hpp"

using namespace whm;

TEST_CASE("search reaches the (t=1, k=18) construction point") {
  const WeightedSpace s(2, {7, 7, 7}, {1, 2, 3});
  const auto result = search_frontier(s, SearchMenu{});
  CHECK(result.assemblies > 100);
  const auto& tf = result.t_frontier;
  const auto it = std::find_if(tf.begin(), tf.end(), [](const SearchPoint& p) { return p.t == 1; });
  REQUIRE(it != tf.end());
  CHECK(it->k == 18);
  // Frontiers strictly trade capability for dimension.
  for (std::size_t i = 1; i < tf.size(); ++i) {
    CHECK(tf[i].t > tf[i - 1].t);
    CHECK(tf[i].k < tf[i - 1].k);
  }
  const auto& df = result.d_frontier;
  for (std::size_t i = 1; i < df.size(); ++i) {
    CHECK(df[i].d > df[i - 1].d);
    CHECK(df[i].k < df[i - 1].k);
  }
  CHECK(tf.front().k == 21);
}

TEST_CASE("search is deterministic") {
  const WeightedSpace s(2, {3, 3}, {1, 2});
  const auto a = search_frontier(s, SearchMenu{});
  const auto b = search_frontier(s, SearchMenu{});
  REQUIRE(a.t_frontier.size() == b.t_frontier.size());
  for (std::size_t i = 0; i < a.t_frontier.size(); ++i) CHECK(a.t_frontier[i].recipe == b.t_frontier[i].recipe);
}

TEST_CASE("search menu validation") {
  const WeightedSpace s(2, {3, 3}, {1, 2});
  SearchMenu empty;
  empty.inner.clear();
  CHECK_THROWS_AS(search_frontier(s, empty), ParameterError);
  SearchMenu zero;
  zero.max_levels = 0;
  CHECK_THROWS_AS(search_frontier(s, zero), ParameterError);
}
