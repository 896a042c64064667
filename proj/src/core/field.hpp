#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace whm {

// A field element in serialized form: the coefficient vector with respect to
// the polynomial basis (1, x, ..., x^{m-1}) read as little-endian base-q digits.
// For prime fields this is just the residue.
using Element = std::uint32_t;
using Vector = std::vector<Element>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_{q^m} with q prime, represented over the polynomial basis
/// modulo a fixed monic irreducible of degree m.
///
/// Immutable after construction. Small fields (order <= 256) keep full
/// addition and multiplication tables; larger ones compute through the
/// coefficient vectors.
class Field {
 public:
  std::uint32_t characteristic() const { return q_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  bool is_prime() const { return m_ == 1; }

  /// Monic modulus, coefficients low-degree-first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Embeds a scalar of the prime subfield.
  Element scalar(std::uint32_t c) const { return c % q_; }

  /// Gamma: coefficient vector over F_q (length degree()).
  std::vector<std::uint32_t> expand(Element e) const;
  /// Inverse of expand().
  Element contract(std::span<const std::uint32_t> coeffs) const;

  bool contains(Element e) const { return e < order_; }
  bool same_as(const Field& other) const;
  std::string describe() const;

 private:
  friend FieldPtr make_prime_field(std::uint32_t q);
  friend FieldPtr make_extension_field(std::uint32_t q, std::uint32_t degree);

  Field(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus);

  Element slow_mul(Element a, Element b) const;
  Element slow_add(Element a, Element b) const;
  Element slow_inv(Element a) const;

  std::uint32_t q_;
  std::uint32_t m_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_table_;
  std::vector<Element> mul_table_;
  std::vector<Element> inv_table_;
  std::vector<Element> neg_table_;
};

FieldPtr make_prime_field(std::uint32_t q);
/// F_{q^m} using the lexicographically smallest monic irreducible of degree m
/// (coefficients compared low-degree-first).
FieldPtr make_extension_field(std::uint32_t q, std::uint32_t degree);

/// Smallest prime factor of n (n itself when prime); 0 for n < 2.
std::uint32_t smallest_factor(std::uint32_t n);

/// True when the monic polynomial (coefficients low-degree-first) has no monic
/// factor of degree 1..deg/2 over F_q.
bool is_irreducible(std::uint32_t q, std::span<const std::uint32_t> monic);

// Vector helpers over a field. Lengths must agree.
Vector vec_add(const Field& f, std::span<const Element> a, std::span<const Element> b);
Vector vec_sub(const Field& f, std::span<const Element> a, std::span<const Element> b);
Vector vec_scale(const Field& f, Element c, std::span<const Element> a);
void vec_axpy(const Field& f, Element c, std::span<const Element> x, std::span<Element> y);
std::size_t hamming_weight(std::span<const Element> v);
std::size_t hamming_distance(std::span<const Element> a, std::span<const Element> b);

}  // namespace whm
