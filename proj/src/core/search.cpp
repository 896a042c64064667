#include "search.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "construct.hpp"
#include "errors.hpp"

namespace whm {

std::string outer_kind_name(OuterKind kind) {
  switch (kind) {
    case OuterKind::full:
      return "full";
    case OuterKind::parity:
      return "mother(parity)";
    case OuterKind::repetition:
      return "mother(repetition)";
    case OuterKind::reed_solomon:
      return "mother(rs)";
  }
  return "?";
}

namespace {

struct ChainOption {
  NestedChain chain;
  std::string name;
};

// Menu codes of one block length, deduplicated by family.
std::vector<std::pair<LinearCode, std::string>> menu_codes(const FieldPtr& f, int n, const SearchMenu& menu) {
  std::vector<std::pair<LinearCode, std::string>> out;
  for (CodeFamily fam : menu.inner) {
    // Reed-Solomon enters with every dimension 1..n-1.
    std::vector<std::size_t> dims{0};
    if (fam == CodeFamily::reed_solomon) {
      dims.clear();
      for (int k = 1; k < n; ++k) dims.push_back(static_cast<std::size_t>(k));
    }
    for (std::size_t k : dims) {
      try {
        std::string name = family_name(fam) + (k ? " " + std::to_string(k) : "");
        out.emplace_back(named_code(fam, f, static_cast<std::size_t>(n), k), name);
      } catch (const ParameterError&) {
        // Family not defined at this length (e.g. Hamming needs (q^r - 1)/(q - 1)).
      }
    }
  }
  return out;
}

// Chains with exactly `levels` codes, each contained in the previous one.
void extend_chains(const std::vector<std::pair<LinearCode, std::string>>& codes, std::size_t levels,
                   std::vector<std::size_t>& picked, std::vector<ChainOption>& out) {
  if (picked.size() == levels) {
    std::vector<LinearCode> chain;
    std::string name;
    for (auto i : picked) {
      chain.push_back(codes[i].first);
      name += (name.empty() ? "" : ">") + codes[i].second;
    }
    out.push_back({NestedChain(std::move(chain)), name});
    return;
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (!picked.empty()) {
      const LinearCode& outer = codes[picked.back()].first;
      if (codes[i].first.dimension() >= outer.dimension() && i != picked.back()) continue;
      if (!outer.contains_code(codes[i].first)) continue;
    }
    picked.push_back(i);
    extend_chains(codes, levels, picked, out);
    picked.pop_back();
  }
}

}  // namespace

SearchResult search_frontier(const WeightedSpace& space, const SearchMenu& menu) {
  if (menu.max_levels < 1) throw ParameterError("search needs max_levels >= 1");
  if (menu.inner.empty() || menu.outer.empty()) throw ParameterError("search menu is empty");
  const FieldPtr f = make_prime_field(space.q());
  const std::size_t m = space.block_count();

  std::vector<std::vector<std::pair<LinearCode, std::string>>> codes(m);
  for (std::size_t l = 0; l < m; ++l) codes[l] = menu_codes(f, space.blocks()[l], menu);

  SearchResult result;
  std::map<long, SearchPoint> best_t, best_d;
  auto record = [&](std::map<long, SearchPoint>& best, long key, const SearchPoint& p) {
    auto it = best.find(key);
    if (it == best.end() || p.k > it->second.k) best[key] = p;
  };

  // Mother codes are shared across assemblies: (family, mu, k) -> code.
  std::map<std::tuple<int, int, std::size_t>, std::optional<LinearCode>> mothers;
  auto mother = [&](CodeFamily fam, int mu, std::size_t k) -> const std::optional<LinearCode>& {
    auto key = std::make_tuple(static_cast<int>(fam), mu, k);
    auto it = mothers.find(key);
    if (it != mothers.end()) return it->second;
    std::optional<LinearCode> c;
    try {
      const FieldPtr ext = make_extension_field(space.q(), static_cast<std::uint32_t>(mu));
      c = named_code(fam, ext, m, fam == CodeFamily::reed_solomon ? k : 0);
    } catch (const ParameterError&) {
    }
    return mothers.emplace(key, std::move(c)).first->second;
  };

  // Every outer option for one level: (code, name). Full space first.
  auto outer_options = [&](const std::vector<int>& sizes) {
    std::vector<std::pair<PolyalphabeticCode, std::string>> out;
    std::vector<int> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    for (OuterKind kind : menu.outer) {
      if (kind == OuterKind::full) {
        bool any = std::any_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
        if (any) out.emplace_back(full_poly_code(f, sizes), "full");
        continue;
      }
      std::vector<std::pair<CodeFamily, std::size_t>> picks;
      if (kind == OuterKind::parity && m >= 2) picks.emplace_back(CodeFamily::parity, m - 1);
      if (kind == OuterKind::repetition) picks.emplace_back(CodeFamily::repetition, 1);
      if (kind == OuterKind::reed_solomon) {
        for (std::size_t k = 1; k < m; ++k) picks.emplace_back(CodeFamily::reed_solomon, k);
      }
      for (auto [fam, k] : picks) {
        const int mu = sorted[k - 1];
        if (mu < 1) continue;
        const auto& mc = mother(fam, mu, k);
        if (!mc || mc->dimension() != k) continue;
        try {
          PolyalphabeticCode a = poly_from_mother_any_order(*mc, sizes);
          a.declare_distance(family_distance(fam, m, k));
          std::string name = "mother(" + family_name(fam) + (fam == CodeFamily::reed_solomon ? " " + std::to_string(k) : "") + ")";
          out.emplace_back(std::move(a), name);
        } catch (const ParameterError&) {
        }
      }
    }
    return out;
  };

  GccOptions options;
  options.use_declared_distances = true;

  for (std::size_t s = 1; s <= menu.max_levels; ++s) {
    std::vector<std::vector<ChainOption>> chains(m);
    for (std::size_t l = 0; l < m; ++l) {
      std::vector<std::size_t> picked;
      extend_chains(codes[l], s, picked, chains[l]);
    }
    if (std::any_of(chains.begin(), chains.end(), [](const auto& c) { return c.empty(); })) continue;

    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<NestedChain> chosen;
      std::string inner_name;
      for (std::size_t l = 0; l < m; ++l) {
        chosen.push_back(chains[l][pick[l]].chain);
        inner_name += (l ? " | " : "") + chains[l][pick[l]].name;
      }
      std::vector<std::vector<std::pair<PolyalphabeticCode, std::string>>> outers(s);
      bool feasible = true;
      for (std::size_t j = 0; j < s && feasible; ++j) {
        std::vector<int> sizes(m);
        for (std::size_t l = 0; l < m; ++l) sizes[l] = static_cast<int>(chosen[l].quotient_dimension(j));
        outers[j] = outer_options(sizes);
        feasible = !outers[j].empty();
      }
      if (feasible) {
        std::vector<std::size_t> opick(s, 0);
        while (true) {
          std::vector<PolyalphabeticCode> level_codes;
          std::string outer_name;
          for (std::size_t j = 0; j < s; ++j) {
            level_codes.push_back(outers[j][opick[j]].first);
            outer_name += (j ? ", " : "") + outers[j][opick[j]].second;
          }
          try {
            GccCode g(space, chosen, std::move(level_codes), options);
            ++result.assemblies;
            SearchPoint p{static_cast<long>(g.dimension()), g.designed_distance(), g.capability_bound(),
                          inner_name + " ; " + outer_name};
            record(best_t, p.t, p);
            record(best_d, p.d, p);
          } catch (const ParameterError&) {
          }
          std::size_t j = s;
          while (j > 0 && ++opick[j - 1] == outers[j - 1].size()) opick[--j] = 0;
          if (j == 0) break;
        }
      }
      std::size_t l = m;
      while (l > 0 && ++pick[l - 1] == chains[l - 1].size()) pick[--l] = 0;
      if (l == 0) break;
    }
  }

  // Pareto: keep a point only if no larger key reaches at least its k.
  auto frontier = [](const std::map<long, SearchPoint>& best) {
    std::vector<SearchPoint> out;
    long running = -1;
    for (auto it = best.rbegin(); it != best.rend(); ++it) {
      if (it->second.k > running) {
        out.push_back(it->second);
        running = it->second.k;
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  };
  result.t_frontier = frontier(best_t);
  result.d_frontier = frontier(best_d);
  return result;
}

}  // namespace whm
