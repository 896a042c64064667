#pragma once

// Codes from the worked examples, assembled through the library API.

#include <algorithm>
#include <optional>
#include <random>

#include "code.hpp"
#include "construct.hpp"
#include "errors.hpp"

namespace whm::fixtures {

/// Polyalphabetic code from the [3,2,2] parity-check mother over F_{q^2} with
/// symbol sizes (1,2,3).
inline PolyalphabeticCode poly_parity(std::uint32_t q) {
  const auto mother = named_code(CodeFamily::parity, make_extension_field(q, 2), 3);
  return poly_from_mother(mother, {1, 2, 3});
}

/// n=(3,3,3), lambda=(1,2,3): repetition / parity / full under poly_parity.
inline GccCode three_block(std::uint32_t q = 2) {
  const FieldPtr f = make_prime_field(q);
  std::vector<NestedChain> chains{NestedChain({named_code(CodeFamily::repetition, f, 3)}),
                                  NestedChain({named_code(CodeFamily::parity, f, 3)}),
                                  NestedChain({named_code(CodeFamily::full, f, 3)})};
  return GccCode(WeightedSpace(q, {3, 3, 3}, {1, 2, 3}), std::move(chains), {poly_parity(q)});
}

/// n=(3,3), lambda=(1,2): repetition and full inner codes, full outer code.
inline GccCode two_block() {
  const FieldPtr f = make_prime_field(2);
  std::vector<NestedChain> chains{NestedChain({named_code(CodeFamily::repetition, f, 3)}),
                                  NestedChain({named_code(CodeFamily::full, f, 3)})};
  return GccCode(WeightedSpace(2, {3, 3}, {1, 2}), std::move(chains), {full_poly_code(f, {1, 3})});
}

/// Two-level binary [9,3] instance for n=(6,3), lambda=(1,2).
inline GccCode two_level() {
  const FieldPtr f = make_prime_field(2);
  const LinearCode b11(f, {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 0, 0}});
  const LinearCode b21(f, {{1, 1, 1, 1, 1, 1}});
  std::vector<NestedChain> chains{
      NestedChain({b11, b21}),
      NestedChain({named_code(CodeFamily::full, f, 3), named_code(CodeFamily::repetition, f, 3)})};
  PolyalphabeticCode a1(f, {1, 2}, {{1, 1, 0}});
  return GccCode(WeightedSpace(2, {6, 3}, {1, 2}), std::move(chains), {a1, full_poly_code(f, {1, 1})});
}

/// n=(7,7,7), lambda=(1,2,3): Hamming [7,4,3] / full / full, full outer code.
inline GccCode hamming_full_full() {
  const FieldPtr f = make_prime_field(2);
  std::vector<NestedChain> chains{NestedChain({named_code(CodeFamily::hamming, f, 7)}),
                                  NestedChain({named_code(CodeFamily::full, f, 7)}),
                                  NestedChain({named_code(CodeFamily::full, f, 7)})};
  return GccCode(WeightedSpace(2, {7, 7, 7}, {1, 2, 3}), std::move(chains), {full_poly_code(f, {4, 7, 7})});
}

/// Random small binary GCC: 2-3 blocks of length 3-4, one or two levels,
/// inner chains from repetition/parity/full, outer codes full or
/// Polyalphabetic code from a parity or repetition mother. Dimension <= max_k.
inline std::optional<GccCode> random_gcc(std::mt19937_64& rng, std::size_t max_k = 12) {
  const FieldPtr f = make_prime_field(2);
  std::uniform_int_distribution<int> coin(0, 1), lam(1, 4), pick(0, 1 << 20);
  const int m = 2 + coin(rng);
  std::vector<int> blocks, lambda;
  for (int l = 0; l < m; ++l) {
    blocks.push_back(3 + coin(rng));
    lambda.push_back(lam(rng));
  }
  std::sort(lambda.begin(), lambda.end());
  const std::size_t s = 1 + static_cast<std::size_t>(coin(rng));
  std::vector<NestedChain> chains;
  for (int l = 0; l < m; ++l) {
    const std::size_t n = static_cast<std::size_t>(blocks[l]);
    std::vector<LinearCode> menu{named_code(CodeFamily::full, f, n), named_code(CodeFamily::parity, f, n),
                                 named_code(CodeFamily::repetition, f, n)};
    std::vector<std::vector<LinearCode>> options;
    for (std::size_t a = 0; a < menu.size(); ++a) {
      if (s == 1) {
        options.push_back({menu[a]});
        continue;
      }
      for (std::size_t b = a + 1; b < menu.size(); ++b) {
        if (menu[a].contains_code(menu[b])) options.push_back({menu[a], menu[b]});
      }
    }
    chains.emplace_back(options[static_cast<std::size_t>(pick(rng)) % options.size()]);
  }
  std::vector<PolyalphabeticCode> outers;
  try {
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<int> sizes;
      for (const auto& c : chains) sizes.push_back(static_cast<int>(c.quotient_dimension(j)));
      std::vector<int> sorted = sizes;
      std::sort(sorted.begin(), sorted.end());
      std::vector<PolyalphabeticCode> options{full_poly_code(f, sizes)};
      for (auto fam : {CodeFamily::parity, CodeFamily::repetition}) {
        const std::size_t k = fam == CodeFamily::parity ? sizes.size() - 1 : 1;
        const int mu = sorted[k - 1];
        if (mu < 1) continue;
        try {
          const auto ext = make_extension_field(2, static_cast<std::uint32_t>(mu));
          options.push_back(poly_from_mother_any_order(named_code(fam, ext, sizes.size()), sizes));
        } catch (const ParameterError&) {
        }
      }
      outers.push_back(options[static_cast<std::size_t>(pick(rng)) % options.size()]);
    }
    GccCode g(WeightedSpace(2, blocks, lambda), std::move(chains), std::move(outers));
    if (g.dimension() > max_k) return std::nullopt;
    return g;
  } catch (const ParameterError&) {
    return std::nullopt;  // e.g. a level with only zero-width symbols
  }
}

}  // namespace whm::fixtures
