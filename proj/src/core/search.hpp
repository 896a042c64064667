#pragma once

#include <string>
#include <vector>

#include "code.hpp"
#include "metric.hpp"

namespace whm {

/// Outer-code options per level. "full" is the whole polyalphabetic space;
/// the others are polyalphabetic codes from a mother of that family over
/// F_{q^mu}, mu fixed by the level's symbol sizes.
enum class OuterKind { full, parity, repetition, reed_solomon };

std::string outer_kind_name(OuterKind kind);

struct SearchMenu {
  std::vector<CodeFamily> inner = {CodeFamily::repetition, CodeFamily::parity, CodeFamily::hamming, CodeFamily::full};
  std::vector<OuterKind> outer = {OuterKind::full, OuterKind::parity, OuterKind::repetition, OuterKind::reed_solomon};
  std::size_t max_levels = 2;
};

struct SearchPoint {
  long k = 0;
  long d = 0;  // designed distance
  long t = 0;  // capability bound
  std::string recipe;
};

struct SearchResult {
  std::size_t assemblies = 0;
  std::vector<SearchPoint> t_frontier;  // ascending t, largest k for each
  std::vector<SearchPoint> d_frontier;  // ascending d
};

/// Enumerates every assembly from the menu (chains of 1..max_levels nested
/// menu codes per block, one menu outer per level) and keeps the Pareto
/// frontiers of (t, k) and (d, k). Outer distances are the mother-code
/// distances. Deterministic: the first recipe found is kept on ties.
SearchResult search_frontier(const WeightedSpace& space, const SearchMenu& menu);

}  // namespace whm
