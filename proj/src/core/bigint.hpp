#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace whm {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return BigInt(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt power(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace whm
