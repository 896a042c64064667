#include "construct.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace whm {

PolyalphabeticCode poly_from_mother(const LinearCode& mother, const std::vector<int>& sizes) {
  const Field& ext = mother.field();
  const std::size_t n = mother.length();
  const std::size_t k = mother.dimension();
  if (sizes.size() != n) {
    throw ParameterError("need one symbol size per mother-code position (" + std::to_string(n) + "), got " +
                         std::to_string(sizes.size()));
  }
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw ParameterError("symbol sizes must be sorted non-decreasing");
  if (sizes.front() < 0) throw ParameterError("symbol sizes must be non-negative");
  const int mu = static_cast<int>(ext.degree());
  if (sizes[k - 1] != mu) {
    throw ParameterError("mother code over " + ext.describe() + " needs symbol size " + std::to_string(mu) +
                         " at message position " + std::to_string(k) + ", got " + std::to_string(sizes[k - 1]));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (mother.information_set()[i] != i) throw ParameterError("mother code is not systematic on its first k positions");
  }

  FieldPtr base = make_prime_field(ext.characteristic());
  const std::size_t total = static_cast<std::size_t>(std::accumulate(sizes.begin(), sizes.end(), 0));
  Rows rows;
  std::vector<std::uint32_t> basis(mu, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (int b = 0; b < sizes[i]; ++b) {
      std::fill(basis.begin(), basis.end(), 0);
      basis[b] = 1;
      const Element u = ext.contract(basis);
      const Vector cw = vec_scale(ext, u, mother.generator()[i]);
      Vector row;
      row.reserve(total);
      for (std::size_t p = 0; p < n; ++p) {
        const auto coeffs = ext.expand(cw[p]);
        if (p < k) {
          for (int c = sizes[p]; c < mu; ++c) {
            if (coeffs[c] != 0) throw DefectError("restricted message symbol leaves its subspace");
          }
          row.insert(row.end(), coeffs.begin(), coeffs.begin() + sizes[p]);
        } else {
          row.insert(row.end(), coeffs.begin(), coeffs.end());
          row.insert(row.end(), static_cast<std::size_t>(sizes[p] - mu), 0);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw ParameterError("derived polyalphabetic code has dimension 0");
  return PolyalphabeticCode(base, sizes, std::move(rows));
}

PolyalphabeticCode poly_from_mother_any_order(const LinearCode& mother, const std::vector<int>& sizes) {
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  std::vector<int> sorted(sizes.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = sizes[order[i]];
  const PolyalphabeticCode ordered = poly_from_mother(mother, sorted);

  // sorted position i holds original symbol order[i]; move slices back.
  std::vector<std::size_t> offsets(sizes.size());
  std::size_t off = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    offsets[p] = off;
    off += static_cast<std::size_t>(sizes[p]);
  }
  Rows rows;
  for (const auto& row : ordered.code().generator()) {
    Vector out(off, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto slice = ordered.symbol(row, i);
      std::copy(slice.begin(), slice.end(), out.begin() + static_cast<std::ptrdiff_t>(offsets[order[i]]));
    }
    rows.push_back(std::move(out));
  }
  return PolyalphabeticCode(ordered.code().field_ptr(), sizes, std::move(rows));
}

PolyalphabeticCode full_poly_code(const FieldPtr& field, const std::vector<int>& sizes) {
  const std::size_t total = static_cast<std::size_t>(std::accumulate(sizes.begin(), sizes.end(), 0));
  Rows rows;
  for (std::size_t i = 0; i < total; ++i) {
    Vector r(total, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  PolyalphabeticCode code(field, sizes, std::move(rows));
  code.declare_distance(1);
  return code;
}

GccCode::GccCode(WeightedSpace space, std::vector<NestedChain> chains, std::vector<PolyalphabeticCode> outers,
                 GccOptions options)
    : space_(std::move(space)), chains_(std::move(chains)), outers_(std::move(outers)) {
  const std::size_t m = space_.block_count();
  if (chains_.size() != m) {
    throw ParameterError("need one inner chain per block (" + std::to_string(m) + "), got " + std::to_string(chains_.size()));
  }
  if (outers_.empty()) throw ParameterError("at least one level is required");
  const std::size_t s = outers_.size();
  field_ = chains_.front().code(0).field_ptr();
  if (!field_->is_prime() || field_->order() != space_.q()) {
    throw ParameterError("inner codes must be over F_" + std::to_string(space_.q()));
  }
  for (std::size_t l = 0; l < m; ++l) {
    const NestedChain& c = chains_[l];
    if (c.length() != static_cast<std::size_t>(space_.blocks()[l])) {
      throw ParameterError("chain of block " + std::to_string(l + 1) + " has length " + std::to_string(c.length()) +
                           ", block length is " + std::to_string(space_.blocks()[l]));
    }
    if (c.levels() != s) {
      throw ParameterError("chain of block " + std::to_string(l + 1) + " has " + std::to_string(c.levels()) +
                           " levels, expected " + std::to_string(s));
    }
    if (!c.field().same_as(*field_)) throw ParameterError("all inner codes must share one field");
  }
  inner_distance_.assign(s, std::vector<std::size_t>(m, 0));
  for (std::size_t j = 0; j < s; ++j) {
    const PolyalphabeticCode& a = outers_[j];
    if (!a.field().same_as(*field_)) throw ParameterError("outer code of level " + std::to_string(j + 1) + " is over a different field");
    if (a.symbol_count() != m) {
      throw ParameterError("outer code of level " + std::to_string(j + 1) + " has " + std::to_string(a.symbol_count()) +
                           " symbols, expected " + std::to_string(m));
    }
    for (std::size_t l = 0; l < m; ++l) {
      const auto want = chains_[l].quotient_dimension(j);
      if (static_cast<std::size_t>(a.symbol_sizes()[l]) != want) {
        throw ParameterError("outer code of level " + std::to_string(j + 1) + ": symbol " + std::to_string(l + 1) + " has size " +
                             std::to_string(a.symbol_sizes()[l]) + " but the quotient dimension is " + std::to_string(want));
      }
      inner_distance_[j][l] = chains_[l].code(j).min_distance(options.distance_limit);
    }
    dimension_ += a.dimension();
    const std::size_t d = options.use_declared_distances && a.declared_distance() ? *a.declared_distance()
                                                                                  : a.min_block_distance(options.distance_limit);
    std::size_t effective = 0;
    for (int sz : a.symbol_sizes()) effective += (sz > 0);
    if (d < 1 || d > effective) {
      throw ParameterError("outer distance " + std::to_string(d) + " of level " + std::to_string(j + 1) +
                           " exceeds its number of nonzero-width symbols");
    }
    outer_distance_.push_back(d);
  }

  // Designed distance and capability bound. Zero-width symbols are never
  // nonzero in an outer codeword, so only the remaining blocks take part.
  designed_distance_ = -1;
  capability_bound_ = -1;
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<std::size_t> eff;
    std::vector<long> weighted;
    for (std::size_t l = 0; l < m; ++l) {
      if (symbol_size(j, l) == 0) continue;
      eff.push_back(l);
      weighted.push_back(static_cast<long>(space_.lambda()[l]) * static_cast<long>(inner_distance_[j][l]));
    }
    std::sort(weighted.begin(), weighted.end());
    const std::size_t d = outer_distance_[j];
    const long level_distance = std::accumulate(weighted.begin(), weighted.begin() + static_cast<std::ptrdiff_t>(d), 0L);
    if (designed_distance_ < 0 || level_distance < designed_distance_) designed_distance_ = level_distance;

    // Supports of weight d among the effective blocks.
    std::vector<char> pick(eff.size(), 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(d), pick.end(), 1);
    do {
      WeightProfile p(m, 0);
      for (std::size_t i = 0; i < eff.size(); ++i) {
        if (pick[i]) p[eff[i]] = static_cast<int>(inner_distance_[j][eff[i]]);
      }
      const long tau = tau_of_profile(space_, p);
      if (capability_bound_ < 0 || tau < capability_bound_) capability_bound_ = tau;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
}

Vector GccCode::encode(const std::vector<Vector>& messages) const {
  if (messages.size() != levels()) {
    throw ParameterError("need one message per level (" + std::to_string(levels()) + "), got " + std::to_string(messages.size()));
  }
  Vector c(length(), 0);
  for (std::size_t j = 0; j < levels(); ++j) {
    const Vector a = outers_[j].encode(messages[j]);
    for (std::size_t l = 0; l < blocks(); ++l) {
      const Vector b = chains_[l].quotient_encode(j, outers_[j].symbol(a, l));
      const auto off = static_cast<std::size_t>(space_.offset(l));
      for (std::size_t i = 0; i < b.size(); ++i) c[off + i] = field_->add(c[off + i], b[i]);
    }
  }
  return c;
}

Vector GccCode::encode_flat(std::span<const Element> message) const {
  if (message.size() != dimension_) {
    throw ParameterError("message has length " + std::to_string(message.size()) + ", expected " + std::to_string(dimension_));
  }
  std::vector<Vector> parts;
  std::size_t off = 0;
  for (const auto& a : outers_) {
    parts.emplace_back(message.begin() + static_cast<std::ptrdiff_t>(off),
                       message.begin() + static_cast<std::ptrdiff_t>(off + a.dimension()));
    off += a.dimension();
  }
  return encode(parts);
}

LinearCode GccCode::as_linear_code() const {
  Rows rows;
  for (std::size_t i = 0; i < dimension_; ++i) {
    Vector e(dimension_, 0);
    e[i] = 1;
    rows.push_back(encode_flat(e));
  }
  return LinearCode(field_, std::move(rows));
}

}  // namespace whm
