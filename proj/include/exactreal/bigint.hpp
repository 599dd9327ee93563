#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "exactreal/errors.hpp"

namespace exactreal {

using BigInt = mpz_class;
using Rational = mpq_class;

// Number of bits in |v|; 0 for v = 0.
inline std::size_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline BigInt shift_left(const BigInt& v, unsigned long k) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

// v / 2^k rounded toward zero.
inline BigInt shift_right_trunc(const BigInt& v, unsigned long k) {
  BigInt r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

// a / b rounded toward zero. b must be nonzero.
inline BigInt div_trunc(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_tdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt pow10(unsigned long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

inline BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline BigInt floor_q(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_q(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Nearest integer to q, ties away from zero.
inline BigInt round_half_away(const Rational& q) {
  BigInt num = q.get_num();
  BigInt den = q.get_den();  // > 0 after canonicalization
  BigInt twice = 2 * num;
  twice += sgn(num) >= 0 ? den : -den;
  return div_trunc(twice, 2 * den);
}

// Largest e with 2^e <= q. Requires q > 0.
inline std::int64_t floor_log2_q(const Rational& q) {
  if (sgn(q) <= 0) throw domain_error("floor_log2 of a non-positive rational");
  const BigInt num = q.get_num();
  const BigInt den = q.get_den();
  // num/den lies in (2^(r-1), 2^(r+1)) for r = bitlen(num) - bitlen(den).
  std::int64_t r = static_cast<std::int64_t>(bit_length(num)) -
                   static_cast<std::int64_t>(bit_length(den));
  const bool ge =
      r >= 0 ? num >= shift_left(den, static_cast<unsigned long>(r))
             : shift_left(num, static_cast<unsigned long>(-r)) >= den;
  return ge ? r : r - 1;
}

// Smallest e with q <= 2^e. Requires q > 0.
inline std::int64_t ceil_log2_q(const Rational& q) {
  std::int64_t f = floor_log2_q(q);
  Rational p;
  if (f >= 0) {
    p = Rational(shift_left(BigInt(1), static_cast<unsigned long>(f)));
  } else {
    p = Rational(BigInt(1), shift_left(BigInt(1), static_cast<unsigned long>(-f)));
  }
  return p == q ? f : f + 1;
}

}  // namespace exactreal
