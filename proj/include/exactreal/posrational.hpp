#pragma once

#include <compare>
#include <cstdint>

#include "exactreal/bigint.hpp"
#include "exactreal/errors.hpp"

namespace exactreal {

// A strictly positive rational, used as a precision request. Kept in lowest
// terms with num >= 1 and den >= 1.
class PosRational {
 public:
  PosRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(num_) <= 0 || sgn(den_) <= 0)
      throw domain_error("precision must be strictly positive");
    reduce();
  }

  static PosRational one() { return PosRational(1, 1); }

  // 2^e
  static PosRational pow2(std::int64_t e) {
    if (e >= 0)
      return PosRational(shift_left(BigInt(1), static_cast<unsigned long>(e)), 1);
    return PosRational(1, shift_left(BigInt(1), static_cast<unsigned long>(-e)));
  }

  // 1/(2*10^digits), the query grade used when printing `digits` decimals.
  static PosRational decimal_grade(unsigned digits) {
    return PosRational(1, 2 * pow10(digits));
  }

  static PosRational from_mpq(const Rational& q) {
    if (sgn(q) <= 0) throw domain_error("precision must be strictly positive");
    return PosRational(q.get_num(), q.get_den());
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  PosRational half() const { return scaled_pow2(-1); }

  // value * 2^e
  PosRational scaled_pow2(std::int64_t e) const {
    if (e >= 0)
      return PosRational(shift_left(num_, static_cast<unsigned long>(e)), den_);
    return PosRational(num_, shift_left(den_, static_cast<unsigned long>(-e)));
  }

  PosRational squared() const { return PosRational(num_ * num_, den_ * den_); }

  PosRational operator*(const PosRational& o) const {
    return PosRational(num_ * o.num_, den_ * o.den_);
  }

  PosRational operator+(const PosRational& o) const {
    return PosRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  // Largest e with 2^e <= value.
  std::int64_t floor_log2() const { return floor_log2_q(to_mpq()); }

  Rational to_mpq() const {
    Rational q(num_, den_);
    q.canonicalize();
    return q;
  }

  friend std::strong_ordering operator<=>(const PosRational& a, const PosRational& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  friend bool operator==(const PosRational& a, const PosRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  static PosRational min(const PosRational& a, const PosRational& b) {
    return a <= b ? a : b;
  }

 private:
  void reduce() {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace exactreal
