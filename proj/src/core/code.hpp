#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"

namespace whm {

inline constexpr std::uint64_t kDefaultDistanceLimit = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kSyndromeTableLimit = std::uint64_t{1} << 20;

/// q^k, or ExhaustionRefused when it exceeds limit.
std::uint64_t checked_enumeration(std::uint64_t q, std::size_t k, std::uint64_t limit, const std::string& what);

/// Calls fn(message, codeword) for every message in F^k, lexicographic with
/// the last message symbol varying fastest. Streams; nothing is stored.
template <class Fn>
void for_each_combination(const Field& f, const Rows& basis, std::size_t n, Fn&& fn) {
  const std::size_t k = basis.size();
  Vector msg(k, 0);
  Vector cw(n, 0);
  const Element top = static_cast<Element>(f.order() - 1);
  while (true) {
    fn(static_cast<const Vector&>(msg), static_cast<const Vector&>(cw));
    std::size_t i = k;
    while (i > 0) {
      --i;
      // Odometer step in serialized order; the codeword follows by adding
      // (next - current) times the row.
      const Element next = msg[i] == top ? 0 : msg[i] + 1;
      const Element delta = f.sub(next, msg[i]);
      vec_axpy(f, delta, basis[i], cw);
      msg[i] = next;
      if (next != 0) break;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

/// F_q-linear code given by a generator matrix. Stored in reduced row
/// echelon form, which is systematic on the recorded information set.
///
/// Immutable; the minimum distance and the syndrome table are built lazily
/// under std::call_once and shared between copies.
class LinearCode {
 public:
  /// Row-reduces, drops dependent rows. Throws on an empty or all-zero matrix.
  LinearCode(FieldPtr field, Rows generator);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return generator_.size(); }
  const Rows& generator() const { return generator_; }
  const Rows& parity_check() const { return parity_check_; }
  const std::vector<std::size_t>& information_set() const { return info_set_; }

  Vector encode(std::span<const Element> message) const;
  /// Message of a codeword (its information-set coordinates).
  Vector message_of(std::span<const Element> codeword) const;
  Vector syndrome(std::span<const Element> v) const;
  bool contains(std::span<const Element> v) const;
  /// True when every codeword of other is in this code.
  bool contains_code(const LinearCode& other) const;

  template <class Fn>
  void for_each_codeword(std::uint64_t limit, Fn&& fn) const {
    checked_enumeration(field_->order(), dimension(), limit, "codeword enumeration");
    for_each_combination(*field_, generator_, n_, std::forward<Fn>(fn));
  }

  /// Exhaustive minimum Hamming distance; cached after the first success.
  std::size_t min_distance(std::uint64_t limit = kDefaultDistanceLimit) const;
  /// Guaranteed decoding radius floor((d-1)/2).
  std::size_t bmd_radius() const { return (min_distance() - 1) / 2; }

  /// Bounded-minimum-distance decoding: the unique codeword within
  /// floor((d-1)/2), otherwise nullopt. Syndrome table when q^(n-k) <= 2^20,
  /// nearest-codeword scan otherwise.
  std::optional<Vector> bmd_decode(std::span<const Element> r) const;
  /// Same contract by exhaustive codeword scan.
  std::optional<Vector> bmd_decode_exhaustive(std::span<const Element> r,
                                              std::uint64_t limit = kDefaultDistanceLimit) const;
  bool uses_syndrome_table() const;

  std::string describe() const;

 private:
  struct SyndromeTable {
    std::vector<std::int32_t> slot;  // syndrome index -> leader index or -1
    Rows leaders;
  };
  struct Cache {
    std::once_flag distance_once;
    std::size_t distance = 0;
    std::once_flag table_once;
    SyndromeTable table;
  };

  std::uint64_t syndrome_index(std::span<const Element> v) const;
  const SyndromeTable& table() const;

  FieldPtr field_;
  std::size_t n_ = 0;
  Rows generator_;
  std::vector<std::size_t> info_set_;
  Rows parity_check_;
  std::shared_ptr<Cache> cache_;
};

/// Canonical generators for the families used as component codes.
enum class CodeFamily { repetition, parity, full, hamming, reed_solomon };

std::optional<CodeFamily> parse_family(const std::string& name);
std::string family_name(CodeFamily family);

/// k = 0 selects the family's natural dimension; otherwise it must agree
/// (repetition 1, parity n-1, full n, hamming n-r). Reed-Solomon needs k.
LinearCode named_code(CodeFamily family, const FieldPtr& field, std::size_t n, std::size_t k = 0);

/// Known minimum distance of a family member: repetition n, parity 2,
/// full 1, Hamming 3, Reed-Solomon n - k + 1.
std::size_t family_distance(CodeFamily family, std::size_t n, std::size_t k);

/// F_q-linear code over F_q^{m_1} x ... x F_q^{m_n}, measured by counting
/// nonzero symbol slices. Zero-width symbols are allowed and never count.
class PolyalphabeticCode {
 public:
  PolyalphabeticCode(FieldPtr field, std::vector<int> symbol_sizes, Rows generator);

  const LinearCode& code() const { return code_; }
  const Field& field() const { return code_.field(); }
  const std::vector<int>& symbol_sizes() const { return sizes_; }
  std::size_t symbol_count() const { return sizes_.size(); }
  std::size_t total_length() const { return code_.length(); }
  std::size_t dimension() const { return code_.dimension(); }
  std::size_t symbol_offset(std::size_t i) const { return offsets_[i]; }
  std::span<const Element> symbol(std::span<const Element> word, std::size_t i) const {
    return word.subspan(offsets_[i], static_cast<std::size_t>(sizes_[i]));
  }

  Vector encode(std::span<const Element> message) const { return code_.encode(message); }
  /// Number of nonzero symbols.
  std::size_t symbol_weight(std::span<const Element> word) const;

  /// Exhaustive minimum block-Hamming distance, cached.
  std::size_t min_block_distance(std::uint64_t limit = kDefaultDistanceLimit) const;
  /// Declared distance, used instead of exhaustive search when set
  /// (e.g. the mother-code bound of a derived code).
  void declare_distance(std::size_t d) { declared_ = d; }
  std::optional<std::size_t> declared_distance() const { return declared_; }
  /// Declared distance when present, exact otherwise.
  std::size_t distance() const { return declared_ ? *declared_ : min_block_distance(); }

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  LinearCode code_;
  std::optional<std::size_t> declared_;
  struct DistanceCache {
    std::once_flag once;
    std::size_t value = 0;
  };
  std::shared_ptr<DistanceCache> distance_cache_;
};

/// Errors-and-erasures decoding at symbol level: the unique codeword agreeing
/// with r outside the erased symbols up to e disagreements with 2e + s < d.
/// nullopt on failure. d is the symbol distance of the code.
std::optional<Vector> erasure_decode(const PolyalphabeticCode& code, std::span<const Element> r,
                                     std::span<const std::size_t> erased, std::size_t d,
                                     std::uint64_t limit = kDefaultDistanceLimit);
std::optional<Vector> erasure_decode(const LinearCode& code, std::span<const Element> r,
                                     std::span<const std::size_t> erased);

/// Nested inner codes B_1 >= B_2 >= ... >= B_s >= B_{s+1} = {0} of one block,
/// with fixed coset representatives for each quotient B_j / B_{j+1}.
/// Levels are 0-based here.
class NestedChain {
 public:
  explicit NestedChain(std::vector<LinearCode> codes);

  std::size_t levels() const { return codes_.size(); }
  std::size_t length() const { return codes_.front().length(); }
  const Field& field() const { return codes_.front().field(); }
  const LinearCode& code(std::size_t j) const { return codes_.at(j); }
  /// k(B_j) - k(B_{j+1}).
  std::size_t quotient_dimension(std::size_t j) const { return quotient_rows_.at(j).size(); }
  const Rows& quotient_rows(std::size_t j) const { return quotient_rows_.at(j); }

  Vector quotient_encode(std::size_t j, std::span<const Element> message) const;
  /// The message a with b - quotient_encode(a) in B_{j+1}. Throws when b is not in B_j.
  Vector quotient_decode_message(std::size_t j, std::span<const Element> b) const;

 private:
  std::vector<LinearCode> codes_;
  std::vector<Rows> quotient_rows_;
  std::vector<Rows> decode_basis_;  // quotient rows followed by a basis of B_{j+1}
};

/// Parses the plain-text matrix format: "q n k" (or "q m n k" for F_{q^m})
/// followed by k rows of n serialized elements.
LinearCode parse_code_matrix(const std::string& text);
std::string format_code_matrix(const LinearCode& code);

}  // namespace whm
