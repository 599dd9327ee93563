#include "exactreal/dyadic.hpp"

#include <cstdlib>
#include <limits>

#include "exactreal/errors.hpp"

namespace exactreal {

namespace {

constexpr std::int64_t kMaxExpo = std::int64_t(1) << 60;

std::int64_t checked_expo(std::int64_t e) {
  if (e > kMaxExpo || e < -kMaxExpo)
    throw resource_error("dyadic exponent out of range");
  return e;
}

// Alignment and division shifts go through here so a pathological exponent
// gap surfaces as an error, not an allocation failure.
unsigned long checked_shift(std::int64_t amount, std::size_t current_bits) {
  if (amount < 0) throw resource_error("negative shift amount");
  const std::size_t cap = mantissa_bit_cap();
  if (static_cast<std::uint64_t>(amount) > cap ||
      static_cast<std::uint64_t>(amount) + current_bits > cap) {
    throw resource_error("mantissa size cap (" + std::to_string(cap) +
                         " bits) exceeded by a shift of " + std::to_string(amount));
  }
  return static_cast<unsigned long>(amount);
}

}  // namespace

std::size_t mantissa_bit_cap() {
  static const std::size_t cap = [] {
    if (const char* s = std::getenv("EXACTREAL_MANT_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v >= 64) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1) << 31;
  }();
  return cap;
}

Rational Dyadic::to_rational() const {
  Rational q;
  if (expo_ >= 0) {
    q = Rational(shift_left(mant_, static_cast<unsigned long>(expo_)));
  } else {
    q = Rational(mant_, shift_left(BigInt(1), static_cast<unsigned long>(-expo_)));
  }
  q.canonicalize();
  return q;
}

Dyadic Dyadic::normalized() const {
  if (is_zero()) return Dyadic();
  const mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz == 0) return *this;
  return Dyadic(shift_right_trunc(mant_, tz),
                checked_expo(expo_ + static_cast<std::int64_t>(tz)));
}

std::string Dyadic::debug_string() const {
  const Dyadic n = normalized();
  return n.mant_.get_str() + "▼" + std::to_string(n.expo_);
}

std::string Dyadic::hex_string() const {
  const Dyadic n = normalized();
  const std::string digits = BigInt(abs(n.mant_)).get_str(16);
  return std::string(sgn(n.mant_) < 0 ? "-" : "") + "0x" + digits + "▼" +
         std::to_string(n.expo_);
}

std::string Dyadic::decimal_string() const {
  const Dyadic n = normalized();
  if (n.expo_ >= 0) {
    BigInt v = shift_left(n.mant_, static_cast<unsigned long>(n.expo_));
    return v.get_str();
  }
  // mant / 2^f = mant * 5^f / 10^f, exactly.
  const unsigned long f = static_cast<unsigned long>(-n.expo_);
  BigInt scaled = n.mant_ * pow_ui(BigInt(5), f);
  const bool neg = sgn(scaled) < 0;
  std::string digits = BigInt(abs(scaled)).get_str();
  if (digits.size() <= f) digits.insert(0, f + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - f) + "." +
                    digits.substr(digits.size() - f);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return (neg ? "-" : "") + out;
}

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.expo_ <= y.expo_) {
    const unsigned long s =
        checked_shift(y.expo_ - x.expo_, bit_length(y.mant_));
    return Dyadic(x.mant_ + shift_left(y.mant_, s), x.expo_);
  }
  const unsigned long s = checked_shift(x.expo_ - y.expo_, bit_length(x.mant_));
  return Dyadic(shift_left(x.mant_, s) + y.mant_, y.expo_);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }

Dyadic operator*(const Dyadic& x, const Dyadic& y) {
  return Dyadic(x.mant_ * y.mant_, checked_expo(x.expo_ + y.expo_));
}

std::strong_ordering compare(const Dyadic& x, const Dyadic& y) {
  const int sx = x.sign(), sy = y.sign();
  if (sx != sy) return sx <=> sy;
  if (sx == 0) return std::strong_ordering::equal;
  // Same nonzero sign: compare magnitudes by position of the top bit first,
  // so wildly different exponents never force a large alignment shift.
  const std::int64_t ex = x.exponent(), ey = y.exponent();
  const std::int64_t lx = static_cast<std::int64_t>(bit_length(x.mantissa())) + ex;
  const std::int64_t ly = static_cast<std::int64_t>(bit_length(y.mantissa())) + ey;
  if (lx != ly) return sx > 0 ? lx <=> ly : ly <=> lx;
  // Top bits coincide; the exponent gap is now at most the mantissa width.
  int c;
  if (ex >= ey) {
    c = cmp(shift_left(x.mantissa(), static_cast<unsigned long>(ex - ey)),
            y.mantissa());
  } else {
    c = cmp(x.mantissa(),
            shift_left(y.mantissa(), static_cast<unsigned long>(ey - ex)));
  }
  return c <=> 0;
}

Dyadic abs(const Dyadic& x) { return x.sign() < 0 ? -x : x; }

Dyadic shiftl(const Dyadic& x, std::int64_t n) {
  if (x.is_zero()) return x;
  return Dyadic(x.mantissa(), checked_expo(x.exponent() + n));
}

Dyadic pow(const Dyadic& x, unsigned long n) {
  if (n == 0) return Dyadic(1, 0);
  const std::size_t bits = bit_length(x.mantissa());
  if (bits > 1 && bits > mantissa_bit_cap() / n)
    throw resource_error("mantissa size cap exceeded by pow");
  const std::int64_t e = x.exponent();
  if (e != 0 &&
      static_cast<std::uint64_t>(e < 0 ? -e : e) >
          static_cast<std::uint64_t>(kMaxExpo) / n)
    throw resource_error("dyadic exponent out of range in pow");
  return Dyadic(pow_ui(x.mantissa(), n), e * static_cast<std::int64_t>(n));
}

Dyadic approx(const Dyadic& x, std::int64_t k) {
  if (x.is_zero()) return Dyadic();
  if (x.exponent() >= k) return x;
  const std::int64_t drop = k - x.exponent();
  if (static_cast<std::uint64_t>(drop) >= bit_length(x.mantissa())) return Dyadic();
  return Dyadic(shift_right_trunc(x.mantissa(), static_cast<unsigned long>(drop)), k);
}

Dyadic approx_div(const Dyadic& x, const Dyadic& y, std::int64_t k) {
  if (y.is_zero()) throw domain_error("approximate division by zero");
  if (x.is_zero()) return Dyadic();
  // x/y = (mx/my) * 2^(ex-ey); the quotient truncated onto the 2^k grid is
  // within 2^k of the exact value.
  const std::int64_t s = checked_expo(x.exponent() - y.exponent() - k);
  BigInt q;
  if (s >= 0) {
    const unsigned long sh = checked_shift(s, bit_length(x.mantissa()));
    q = div_trunc(shift_left(x.mantissa(), sh), y.mantissa());
  } else {
    const unsigned long sh = checked_shift(-s, bit_length(y.mantissa()));
    q = div_trunc(x.mantissa(), shift_left(y.mantissa(), sh));
  }
  return Dyadic(std::move(q), k);
}

std::int64_t floor_log2(const Dyadic& x) {
  if (x.sign() <= 0) throw domain_error("floor_log2 of a non-positive dyadic");
  return static_cast<std::int64_t>(bit_length(x.mantissa())) - 1 + x.exponent();
}

Dyadic from_rational_within(const Rational& q, const PosRational& eps) {
  if (sgn(q) == 0) return Dyadic();
  const std::int64_t k = eps.floor_log2();
  const BigInt num = q.get_num();
  const BigInt den = q.get_den();
  BigInt m;
  if (k <= 0) {
    const unsigned long sh = checked_shift(-k, bit_length(num));
    m = div_trunc(shift_left(num, sh), den);
  } else {
    m = div_trunc(num, shift_left(den, checked_shift(k, bit_length(den))));
  }
  return Dyadic(std::move(m), k);
}

}  // namespace exactreal
