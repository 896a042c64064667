#include "field.hpp"

#include <sstream>

#include "errors.hpp"

namespace whm {

namespace {

constexpr std::uint32_t kTableLimit = 256;
constexpr std::uint64_t kMaxOrder = 1u << 24;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo monic b over F_q.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t q) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(q - lead) * b[i]) % q);
    }
    trim(a);
  }
  return a;
}

std::uint64_t checked_power(std::uint32_t q, std::uint32_t m) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    r *= q;
    if (r > kMaxOrder) throw ParameterError("field order " + std::to_string(q) + "^" + std::to_string(m) + " exceeds the supported maximum 2^24");
  }
  return r;
}

void require_prime(std::uint32_t q) {
  if (q < 2) throw ParameterError("field characteristic " + std::to_string(q) + " is not prime");
  const std::uint32_t f = smallest_factor(q);
  if (f != q) {
    throw ParameterError("field characteristic " + std::to_string(q) + " is not prime (divisible by " + std::to_string(f) + ")");
  }
}

}  // namespace

std::uint32_t smallest_factor(std::uint32_t n) {
  if (n < 2) return 0;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

bool is_irreducible(std::uint32_t q, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
      g[d] = 1;
      if (poly_mod(f, g, q).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : q_(q), m_(m), order_(static_cast<std::uint32_t>(checked_power(q, m))), modulus_(std::move(modulus)) {
  if (order_ <= kTableLimit) {
    const std::size_t n = order_;
    add_table_.resize(n * n);
    mul_table_.resize(n * n);
    neg_table_.resize(n);
    inv_table_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        add_table_[a * n + b] = slow_add(a, b);
        mul_table_[a * n + b] = slow_mul(a, b);
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (add_table_[a * n + b] == 0) neg_table_[a] = b;
        if (mul_table_[a * n + b] == 1) inv_table_[a] = b;
      }
    }
  }
}

std::vector<std::uint32_t> Field::expand(Element e) const {
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = e % q_;
    e /= q_;
  }
  return c;
}

Element Field::contract(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw ParameterError("coefficient vector length does not match field degree");
  Element e = 0;
  for (std::size_t i = m_; i-- > 0;) {
    if (coeffs[i] >= q_) throw ParameterError("coefficient outside F_q");
    e = e * q_ + coeffs[i];
  }
  return e;
}

Element Field::slow_add(Element a, Element b) const {
  if (m_ == 1) return (a + b) % q_;
  Element r = 0;
  Element place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a % q_ + b % q_) % q_) * place;
    a /= q_;
    b /= q_;
    place *= q_;
  }
  return r;
}

Element Field::slow_mul(Element a, Element b) const {
  if (m_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % q_);
  const auto x = expand(a);
  const auto y = expand(b);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % q_);
    }
  }
  Poly r = poly_mod(prod, modulus_, q_);
  r.resize(m_, 0);
  return contract(r);
}

Element Field::slow_inv(Element a) const {
  // a^(order-2)
  Element result = 1;
  Element base = a;
  std::uint64_t e = order_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element Field::add(Element a, Element b) const {
  if (!add_table_.empty()) return add_table_[a * order_ + b];
  return slow_add(a, b);
}

Element Field::neg(Element a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  if (m_ == 1) return (q_ - a % q_) % q_;
  auto c = expand(a);
  for (auto& x : c) x = (q_ - x) % q_;
  return contract(c);
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  if (!mul_table_.empty()) return mul_table_[a * order_ + b];
  return slow_mul(a, b);
}

Element Field::inv(Element a) const {
  if (a == 0) throw ParameterError("division by zero in " + describe());
  if (!inv_table_.empty()) return inv_table_[a];
  return slow_inv(a);
}

bool Field::same_as(const Field& other) const {
  return q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (m_ > 1) os << "^" << m_;
  return os.str();
}

FieldPtr make_prime_field(std::uint32_t q) {
  require_prime(q);
  return FieldPtr(new Field(q, 1, {0, 1}));
}

FieldPtr make_extension_field(std::uint32_t q, std::uint32_t degree) {
  require_prime(q);
  if (degree < 1) throw ParameterError("extension degree must be at least 1");
  if (degree == 1) return make_prime_field(q);
  checked_power(q, degree);
  // Candidates ordered by (c_0, c_1, ..., c_{m-1}) with c_0 most significant.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= q;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(degree + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = degree; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    f[degree] = 1;
    if (is_irreducible(q, f)) return FieldPtr(new Field(q, degree, f));
  }
  throw DefectError("no irreducible polynomial found");
}

Vector vec_add(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector vec_sub(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vector vec_scale(const Field& f, Element c, std::span<const Element> a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

void vec_axpy(const Field& f, Element c, std::span<const Element> x, std::span<Element> y) {
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

std::size_t hamming_weight(std::span<const Element> v) {
  std::size_t w = 0;
  for (auto x : v) w += (x != 0);
  return w;
}

std::size_t hamming_distance(std::span<const Element> a, std::span<const Element> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

}  // namespace whm
