#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "field.hpp"

namespace whm::test {

/// Every vector of F_q^n in lexicographic order (last coordinate fastest).
inline std::vector<Vector> all_vectors(std::uint32_t q, std::size_t n) {
  std::vector<Vector> out;
  Vector v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == q - 1) v[--i] = 0;
    if (i == 0) return out;
    ++v[i - 1];
  }
}

inline Vector random_vector(std::mt19937_64& rng, std::uint32_t order, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, order - 1);
  Vector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

/// Span of rows over F_q, by brute force over all coefficient tuples.
inline std::vector<Vector> span_of(const Field& f, const std::vector<Vector>& rows, std::size_t n) {
  std::vector<Vector> out;
  for (const auto& coeff : all_vectors(f.order(), rows.size())) {
    Vector v(n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coeff[i], rows[i][j]));
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace whm::test
