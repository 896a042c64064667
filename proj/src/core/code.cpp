#include "code.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace whm {

std::uint64_t checked_enumeration(std::uint64_t q, std::size_t k, std::uint64_t limit, const std::string& what) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > limit / q) {
      throw ExhaustionRefused(what + " refused: " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the limit of " +
                              std::to_string(limit));
    }
    count *= q;
  }
  if (count > limit) {
    throw ExhaustionRefused(what + " refused: " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the limit of " +
                            std::to_string(limit));
  }
  return count;
}

namespace {

bool power_at_most(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > limit / base) return false;
    v *= base;
  }
  return v <= limit;
}

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ParameterError(std::string(what) + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

}  // namespace

LinearCode::LinearCode(FieldPtr field, Rows generator) : field_(std::move(field)), cache_(std::make_shared<Cache>()) {
  if (!field_) throw ParameterError("code requires a field");
  if (generator.empty() || generator.front().empty()) throw ParameterError("generator matrix is empty");
  n_ = generator.front().size();
  Echelon e = row_reduce(*field_, std::move(generator), n_);
  if (e.rows.empty()) throw ParameterError("generator matrix has rank 0");
  generator_ = std::move(e.rows);
  info_set_ = std::move(e.pivots);

  std::vector<char> is_pivot(n_, 0);
  for (auto p : info_set_) is_pivot[p] = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    if (is_pivot[c]) continue;
    Vector h(n_, 0);
    h[c] = 1;
    for (std::size_t i = 0; i < generator_.size(); ++i) h[info_set_[i]] = field_->neg(generator_[i][c]);
    parity_check_.push_back(std::move(h));
  }
}

Vector LinearCode::encode(std::span<const Element> message) const {
  require_length(message.size(), dimension(), "message");
  Vector c(n_, 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (!field_->contains(message[i])) throw ParameterError("message symbol outside the field");
    vec_axpy(*field_, message[i], generator_[i], c);
  }
  return c;
}

Vector LinearCode::message_of(std::span<const Element> codeword) const {
  require_length(codeword.size(), n_, "codeword");
  Vector m(dimension());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = codeword[info_set_[i]];
  return m;
}

Vector LinearCode::syndrome(std::span<const Element> v) const {
  require_length(v.size(), n_, "word");
  Vector s(parity_check_.size(), 0);
  for (std::size_t r = 0; r < parity_check_.size(); ++r) {
    Element acc = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (parity_check_[r][c] != 0 && v[c] != 0) acc = field_->add(acc, field_->mul(parity_check_[r][c], v[c]));
    }
    s[r] = acc;
  }
  return s;
}

bool LinearCode::contains(std::span<const Element> v) const {
  if (v.size() != n_) return false;
  for (auto x : v) {
    if (!field_->contains(x)) return false;
  }
  const Vector s = syndrome(v);
  return std::all_of(s.begin(), s.end(), [](Element x) { return x == 0; });
}

bool LinearCode::contains_code(const LinearCode& other) const {
  if (other.length() != n_ || !other.field().same_as(*field_)) return false;
  return std::all_of(other.generator().begin(), other.generator().end(), [&](const Vector& row) { return contains(row); });
}

std::size_t LinearCode::min_distance(std::uint64_t limit) const {
  std::call_once(cache_->distance_once, [&] {
    if (dimension() == n_) {
      cache_->distance = 1;
      return;
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    bool first = true;
    for_each_codeword(limit, [&](const Vector&, const Vector& c) {
      if (first) {
        first = false;
        return;
      }
      best = std::min(best, hamming_weight(c));
    });
    cache_->distance = best;
  });
  return cache_->distance;
}

bool LinearCode::uses_syndrome_table() const {
  return power_at_most(field_->order(), n_ - dimension(), kSyndromeTableLimit);
}

std::uint64_t LinearCode::syndrome_index(std::span<const Element> v) const {
  const Vector s = syndrome(v);
  std::uint64_t idx = 0;
  for (std::size_t i = s.size(); i-- > 0;) idx = idx * field_->order() + s[i];
  return idx;
}

const LinearCode::SyndromeTable& LinearCode::table() const {
  std::call_once(cache_->table_once, [&] {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n_ - dimension(); ++i) size *= field_->order();
    SyndromeTable t;
    t.slot.assign(size, -1);
    const std::size_t radius = bmd_radius();
    const Element top = static_cast<Element>(field_->order() - 1);
    // Leaders by increasing weight; within a weight, supports and values in
    // lexicographic order so the first writer is the smallest leader.
    for (std::size_t w = 0; w <= radius; ++w) {
      std::vector<std::size_t> support(w);
      for (std::size_t i = 0; i < w; ++i) support[i] = i;
      while (true) {
        Vector values(w, 1);
        while (true) {
          Vector e(n_, 0);
          for (std::size_t i = 0; i < w; ++i) e[support[i]] = values[i];
          const std::uint64_t idx = syndrome_index(e);
          if (t.slot[idx] < 0) {
            t.slot[idx] = static_cast<std::int32_t>(t.leaders.size());
            t.leaders.push_back(std::move(e));
          }
          std::size_t i = w;
          while (i > 0 && values[i - 1] == top) values[--i] = 1;
          if (i == 0) break;
          ++values[i - 1];
        }
        // next support
        std::size_t i = w;
        while (i > 0 && support[i - 1] == n_ - w + i - 1) --i;
        if (i == 0) break;
        ++support[i - 1];
        for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
      }
    }
    cache_->table = std::move(t);
  });
  return cache_->table;
}

std::optional<Vector> LinearCode::bmd_decode(std::span<const Element> r) const {
  require_length(r.size(), n_, "received word");
  if (!uses_syndrome_table()) return bmd_decode_exhaustive(r);
  const SyndromeTable& t = table();
  const std::int32_t slot = t.slot[syndrome_index(r)];
  if (slot < 0) return std::nullopt;
  return vec_sub(*field_, r, t.leaders[static_cast<std::size_t>(slot)]);
}

std::optional<Vector> LinearCode::bmd_decode_exhaustive(std::span<const Element> r, std::uint64_t limit) const {
  require_length(r.size(), n_, "received word");
  const std::size_t radius = bmd_radius();
  std::optional<Vector> found;
  for_each_codeword(limit, [&](const Vector&, const Vector& c) {
    if (!found && hamming_distance(c, r) <= radius) found = c;
  });
  return found;
}

std::string LinearCode::describe() const {
  std::ostringstream os;
  os << "[" << n_ << "," << dimension() << "] code over " << field_->describe();
  return os.str();
}

std::optional<CodeFamily> parse_family(const std::string& name) {
  if (name == "repetition") return CodeFamily::repetition;
  if (name == "parity") return CodeFamily::parity;
  if (name == "full") return CodeFamily::full;
  if (name == "hamming") return CodeFamily::hamming;
  if (name == "reed_solomon" || name == "rs") return CodeFamily::reed_solomon;
  return std::nullopt;
}

std::string family_name(CodeFamily family) {
  switch (family) {
    case CodeFamily::repetition: return "repetition";
    case CodeFamily::parity: return "parity";
    case CodeFamily::full: return "full";
    case CodeFamily::hamming: return "hamming";
    case CodeFamily::reed_solomon: return "reed_solomon";
  }
  return "?";
}

std::size_t family_distance(CodeFamily family, std::size_t n, std::size_t k) {
  switch (family) {
    case CodeFamily::repetition: return n;
    case CodeFamily::parity: return 2;
    case CodeFamily::full: return 1;
    case CodeFamily::hamming: return 3;
    case CodeFamily::reed_solomon: return n - k + 1;
  }
  throw DefectError("unknown code family");
}

LinearCode named_code(CodeFamily family, const FieldPtr& field, std::size_t n, std::size_t k) {
  if (!field) throw ParameterError("code requires a field");
  if (n < 1) throw ParameterError("code length must be positive");
  const Field& f = *field;
  auto expect_k = [&](std::size_t natural) {
    if (k != 0 && k != natural) {
      throw ParameterError(family_name(family) + " code of length " + std::to_string(n) + " has dimension " +
                           std::to_string(natural) + ", not " + std::to_string(k));
    }
  };
  Rows g;
  switch (family) {
    case CodeFamily::repetition:
      expect_k(1);
      g.push_back(Vector(n, 1));
      break;
    case CodeFamily::parity: {
      if (n < 2) throw ParameterError("parity-check code needs length at least 2");
      expect_k(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Vector row(n, 0);
        row[i] = 1;
        row[n - 1] = f.neg(1);
        g.push_back(std::move(row));
      }
      break;
    }
    case CodeFamily::full:
      expect_k(n);
      for (std::size_t i = 0; i < n; ++i) {
        Vector row(n, 0);
        row[i] = 1;
        g.push_back(std::move(row));
      }
      break;
    case CodeFamily::hamming: {
      const std::uint64_t Q = f.order();
      std::size_t r = 1;
      std::uint64_t len = 1;
      while (len < n) {
        len = len * Q + 1;
        ++r;
      }
      if (len != n || r < 2) {
        throw ParameterError("no Hamming code of length " + std::to_string(n) + " over " + f.describe());
      }
      expect_k(n - r);
      // Columns: nonzero vectors of F^r whose first nonzero entry is 1, in serialized order.
      Rows h(r, Vector(n, 0));
      std::size_t col = 0;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < r; ++i) total *= Q;
      for (std::uint64_t code = 1; code < total; ++code) {
        Vector v(r);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < r; ++i) {
          v[i] = static_cast<Element>(c % Q);
          c /= Q;
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
        if (*lead != 1) continue;
        for (std::size_t i = 0; i < r; ++i) h[i][col] = v[i];
        ++col;
      }
      g = null_space(f, h, n);
      break;
    }
    case CodeFamily::reed_solomon: {
      if (n > f.order()) throw ParameterError("Reed-Solomon length " + std::to_string(n) + " exceeds field order " + std::to_string(f.order()));
      if (k < 1 || k > n) throw ParameterError("Reed-Solomon dimension must be in 1..n");
      Vector points(n);
      for (std::size_t i = 0; i < n; ++i) points[i] = i + 1 < f.order() ? static_cast<Element>(i + 1) : 0;
      for (std::size_t j = 0; j < k; ++j) {
        Vector row(n);
        for (std::size_t i = 0; i < n; ++i) {
          Element p = 1;
          for (std::size_t e = 0; e < j; ++e) p = f.mul(p, points[i]);
          row[i] = p;
        }
        g.push_back(std::move(row));
      }
      break;
    }
  }
  return LinearCode(field, std::move(g));
}

PolyalphabeticCode::PolyalphabeticCode(FieldPtr field, std::vector<int> symbol_sizes, Rows generator)
    : sizes_(std::move(symbol_sizes)),
      code_([&]() -> LinearCode {
        std::size_t total = 0;
        for (int s : sizes_) {
          if (s < 0) throw ParameterError("symbol sizes must be non-negative");
          total += static_cast<std::size_t>(s);
        }
        if (total == 0) throw ParameterError("polyalphabetic code has total length 0");
        for (const auto& row : generator) require_length(row.size(), total, "generator row");
        if (field && !field->is_prime()) throw ParameterError("polyalphabetic codes are defined over a prime field");
        return LinearCode(std::move(field), std::move(generator));
      }()),
      distance_cache_(std::make_shared<DistanceCache>()) {
  std::size_t off = 0;
  for (int s : sizes_) {
    offsets_.push_back(off);
    off += static_cast<std::size_t>(s);
  }
}

std::size_t PolyalphabeticCode::symbol_weight(std::span<const Element> word) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    const auto s = symbol(word, i);
    if (std::any_of(s.begin(), s.end(), [](Element x) { return x != 0; })) ++w;
  }
  return w;
}

std::size_t PolyalphabeticCode::min_block_distance(std::uint64_t limit) const {
  std::call_once(distance_cache_->once, [&] {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    bool first = true;
    code_.for_each_codeword(limit, [&](const Vector&, const Vector& c) {
      if (first) {
        first = false;
        return;
      }
      best = std::min(best, symbol_weight(c));
    });
    distance_cache_->value = best;
  });
  return distance_cache_->value;
}

namespace {

std::optional<Vector> erasure_decode_impl(const LinearCode& code, std::span<const int> sizes,
                                          std::span<const std::size_t> offsets, std::span<const Element> r,
                                          std::span<const std::size_t> erased, std::size_t d, std::uint64_t limit) {
  require_length(r.size(), code.length(), "received word");
  std::vector<char> is_erased(sizes.size(), 0);
  for (auto p : erased) {
    if (p >= sizes.size()) throw ParameterError("erased position " + std::to_string(p) + " out of range");
    is_erased[p] = 1;
  }
  std::size_t s = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (is_erased[i] && sizes[i] > 0);
  if (s >= d) return std::nullopt;

  if (d - s <= 2) {
    // Only e = 0 is admissible: solve for the codeword agreeing with r on the
    // kept coordinates. Unique because s < d.
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (is_erased[i]) continue;
      for (int j = 0; j < sizes[i]; ++j) coords.push_back(offsets[i] + static_cast<std::size_t>(j));
    }
    Rows restricted;
    for (const auto& row : code.generator()) {
      Vector v(coords.size());
      for (std::size_t c = 0; c < coords.size(); ++c) v[c] = row[coords[c]];
      restricted.push_back(std::move(v));
    }
    Vector target(coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) target[c] = r[coords[c]];
    auto x = solve_combination(code.field(), restricted, target);
    if (!x) return std::nullopt;
    return code.encode(*x);
  }

  const std::size_t max_errors = (d - s - 1) / 2;
  std::optional<Vector> found;
  std::size_t found_errors = 0;
  bool tie = false;
  code.for_each_codeword(limit, [&](const Vector&, const Vector& c) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < sizes.size() && e <= max_errors; ++i) {
      if (is_erased[i] || sizes[i] == 0) continue;
      for (int j = 0; j < sizes[i]; ++j) {
        if (c[offsets[i] + j] != r[offsets[i] + j]) {
          ++e;
          break;
        }
      }
    }
    if (e > max_errors) return;
    if (!found || e < found_errors) {
      found = c;
      found_errors = e;
      tie = false;
    } else if (e == found_errors) {
      tie = true;
    }
  });
  if (tie) return std::nullopt;
  return found;
}

}  // namespace

std::optional<Vector> erasure_decode(const PolyalphabeticCode& code, std::span<const Element> r,
                                     std::span<const std::size_t> erased, std::size_t d, std::uint64_t limit) {
  std::vector<std::size_t> offsets(code.symbol_count());
  for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = code.symbol_offset(i);
  return erasure_decode_impl(code.code(), code.symbol_sizes(), offsets, r, erased, d, limit);
}

std::optional<Vector> erasure_decode(const LinearCode& code, std::span<const Element> r,
                                     std::span<const std::size_t> erased) {
  const std::vector<int> sizes(code.length(), 1);
  std::vector<std::size_t> offsets(code.length());
  for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = i;
  return erasure_decode_impl(code, sizes, offsets, r, erased, code.min_distance(), kDefaultDistanceLimit);
}

NestedChain::NestedChain(std::vector<LinearCode> codes) : codes_(std::move(codes)) {
  if (codes_.empty()) throw ParameterError("a chain needs at least one code");
  const Field& f = codes_.front().field();
  const std::size_t n = codes_.front().length();
  for (std::size_t j = 0; j < codes_.size(); ++j) {
    if (codes_[j].length() != n) throw ParameterError("chain level " + std::to_string(j + 1) + " has a different length");
    if (!codes_[j].field().same_as(f)) throw ParameterError("chain level " + std::to_string(j + 1) + " is over a different field");
    if (j + 1 < codes_.size() && !codes_[j].contains_code(codes_[j + 1])) {
      throw ParameterError("chain level " + std::to_string(j + 2) + " is not a subcode of level " + std::to_string(j + 1));
    }
  }
  for (std::size_t j = 0; j < codes_.size(); ++j) {
    const Rows next = j + 1 < codes_.size() ? codes_[j + 1].generator() : Rows{};
    Rows span_rows = next;
    Rows quotient;
    std::size_t current_rank = span_rows.size();
    for (const auto& g : codes_[j].generator()) {
      span_rows.push_back(g);
      const std::size_t r = rank(f, span_rows, n);
      if (r > current_rank) {
        quotient.push_back(g);
        current_rank = r;
      } else {
        span_rows.pop_back();
      }
    }
    Rows basis = quotient;
    basis.insert(basis.end(), next.begin(), next.end());
    quotient_rows_.push_back(std::move(quotient));
    decode_basis_.push_back(std::move(basis));
  }
}

Vector NestedChain::quotient_encode(std::size_t j, std::span<const Element> message) const {
  const Rows& rows = quotient_rows_.at(j);
  require_length(message.size(), rows.size(), "quotient message");
  Vector v(length(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) vec_axpy(field(), message[i], rows[i], v);
  return v;
}

Vector NestedChain::quotient_decode_message(std::size_t j, std::span<const Element> b) const {
  if (!codes_.at(j).contains(b)) throw ParameterError("vector is not a codeword of chain level " + std::to_string(j + 1));
  auto x = solve_combination(field(), decode_basis_[j], b);
  if (!x) throw DefectError("codeword has no coordinates in the chain basis");
  return Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(quotient_rows_[j].size()));
}

LinearCode parse_code_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  while (std::getline(in, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream hs(header);
  std::vector<long> h;
  long x;
  while (hs >> x) h.push_back(x);
  if (!hs.eof()) throw ParameterError("matrix header is not numeric: '" + header + "'");
  long q, m = 1, n, k;
  if (h.size() == 3) {
    q = h[0], n = h[1], k = h[2];
  } else if (h.size() == 4) {
    q = h[0], m = h[1], n = h[2], k = h[3];
  } else {
    throw ParameterError("matrix header must be 'q n k' or 'q m n k'");
  }
  if (q < 2 || m < 1 || n < 1 || k < 1) throw ParameterError("matrix header values out of range");
  FieldPtr field = make_extension_field(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(m));
  Rows g(static_cast<std::size_t>(k), Vector(static_cast<std::size_t>(n)));
  for (auto& row : g) {
    for (auto& e : row) {
      long v;
      if (!(in >> v)) throw ParameterError("matrix body ends early: expected " + std::to_string(k) + " rows of " + std::to_string(n));
      if (v < 0 || static_cast<std::uint64_t>(v) >= field->order()) {
        throw ParameterError("matrix entry " + std::to_string(v) + " is not an element of " + field->describe());
      }
      e = static_cast<Element>(v);
    }
  }
  std::string rest;
  if (in >> rest) throw ParameterError("unexpected trailing data in matrix file: '" + rest + "'");
  return LinearCode(field, std::move(g));
}

std::string format_code_matrix(const LinearCode& code) {
  std::ostringstream os;
  const Field& f = code.field();
  os << f.characteristic() << ' ';
  if (!f.is_prime()) os << f.degree() << ' ';
  os << code.length() << ' ' << code.dimension() << '\n';
  for (const auto& row : code.generator()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace whm
