#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "exactreal/bigint.hpp"
#include "exactreal/posrational.hpp"

namespace exactreal {

// An arbitrary-precision dyadic rational mant * 2^expo. The mantissa is a big
// integer, the exponent a machine integer. Addition, multiplication, negation
// and shifts are exact; division and re-gridding are approximate with an
// explicit 2^k error bound.
//
// Representation is not kept canonical: semantic equality is equality of
// values (compare(...) == 0), not of (mant, expo) pairs. normalized() strips
// trailing zero bits for printing and hashing.
class Dyadic {
 public:
  Dyadic() : mant_(0), expo_(0) {}
  explicit Dyadic(BigInt mant, std::int64_t expo = 0)
      : mant_(std::move(mant)), expo_(expo) {}

  const BigInt& mantissa() const { return mant_; }
  std::int64_t exponent() const { return expo_; }

  bool is_zero() const { return sgn(mant_) == 0; }
  int sign() const { return sgn(mant_); }

  Rational to_rational() const;

  // Odd-or-zero mantissa; zero is 0*2^0.
  Dyadic normalized() const;

  // "mant▼expo" (normalized), for logs and tests.
  std::string debug_string() const;
  // Same shape with a hex mantissa: "0xd▼-4".
  std::string hex_string() const;
  // Exact decimal expansion (always finite for a dyadic).
  std::string decimal_string() const;

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x) { return Dyadic(-x.mant_, x.expo_); }
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y);

 private:
  BigInt mant_;
  std::int64_t expo_;
};

// Value comparison, total and decidable.
std::strong_ordering compare(const Dyadic& x, const Dyadic& y);
inline bool operator==(const Dyadic& x, const Dyadic& y) {
  return compare(x, y) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
  return compare(x, y);
}

Dyadic abs(const Dyadic& x);

// x * 2^n, exact in both directions (exponent adjustment only).
Dyadic shiftl(const Dyadic& x, std::int64_t n);

// x^n with x^0 = 1.
Dyadic pow(const Dyadic& x, unsigned long n);

// A value within 2^k of x whose mantissa fits the 2^k grid: bit length drops
// to at most bitlen(mant) - (k - expo). Truncates toward zero; returns x
// unchanged when x.expo >= k.
Dyadic approx(const Dyadic& x, std::int64_t k);

// A value within 2^k of x/y, by truncating shifted integer division.
// Throws domain_error when y = 0.
Dyadic approx_div(const Dyadic& x, const Dyadic& y, std::int64_t k);

// Largest e with 2^e <= x. Requires x > 0.
std::int64_t floor_log2(const Dyadic& x);

inline Dyadic from_int(const BigInt& v) { return Dyadic(v, 0); }

// A dyadic within eps of q: q truncated to the grid 2^floor_log2(eps).
Dyadic from_rational_within(const Rational& q, const PosRational& eps);

// Upper bound, in bits, on mantissas produced by exponent alignment; read
// once from EXACTREAL_MANT_CAP (default 2^31). Exceeding it raises
// resource_error instead of exhausting memory.
std::size_t mantissa_bit_cap();

}  // namespace exactreal
