#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

namespace {

Rational abs_q(const Rational& q) { return Rational(abs(q)); }

Rational tol_for(unsigned guard_digits) {
  return Rational(1, exactreal::pow10(guard_digits));
}

}  // namespace

QInterval exp_q(const Rational& x, unsigned guard_digits) {
  const Rational tol = tol_for(guard_digits);
  Rational term(1), sum(1);
  const Rational ax = abs_q(x);
  for (unsigned long i = 1;; ++i) {
    term *= x;
    term /= static_cast<long>(i);
    sum += term;
    // Once i >= 2|x| + 2 every later term at most halves, so the tail is
    // bounded by 2|term| regardless of sign pattern.
    if (Rational(i) >= 2 * ax + 2 && abs_q(term) < tol) break;
    if (i > 1000000) throw std::runtime_error("exp_q did not converge");
  }
  const Rational b = 2 * abs_q(term);
  return {Rational(sum - b), Rational(sum + b)};
}

QInterval sin_q(const Rational& x, unsigned guard_digits) {
  const Rational tol = tol_for(guard_digits);
  const Rational x2(x * x);
  Rational term = x, sum = x;
  for (unsigned long i = 1;; ++i) {
    term *= x2;
    term /= static_cast<long>(2 * i);
    term /= static_cast<long>(2 * i + 1);
    term = Rational(-term);
    sum += term;
    if (Rational(2 * i + 2) * Rational(2 * i + 3) > x2 && abs_q(term) < tol)
      break;
    if (i > 1000000) throw std::runtime_error("sin_q did not converge");
  }
  const Rational b = 2 * abs_q(term);
  return {Rational(sum - b), Rational(sum + b)};
}

QInterval atan_q(const Rational& x, unsigned guard_digits) {
  if (abs_q(x) > 1) throw std::runtime_error("atan_q needs |x| <= 1");
  const Rational tol = tol_for(guard_digits);
  const Rational x2(x * x);
  Rational power = x, sum = x;
  // Alternating with strictly decreasing magnitudes from the first term, so
  // the truncation error is below the first omitted term.
  for (unsigned long i = 1;; ++i) {
    power *= x2;
    power = Rational(-power);
    const Rational term(power / static_cast<long>(2 * i + 1));
    sum += term;
    if (abs_q(term) < tol) break;
    if (i > 1000000) throw std::runtime_error("atan_q did not converge");
  }
  const Rational b = abs_q(power);
  return {Rational(sum - b), Rational(sum + b)};
}

QInterval pi_q(unsigned guard_digits) {
  const unsigned g = guard_digits + 4;
  return atan_q(Rational(1, 57), g).scaled(176) +
         atan_q(Rational(1, 239), g).scaled(28) -
         atan_q(Rational(1, 682), g).scaled(48) +
         atan_q(Rational(1, 12943), g).scaled(96);
}

QInterval sin_i(const QInterval& x, unsigned guard_digits) {
  // |sin u - sin v| <= |u - v|: evaluate at the midpoint and widen by the
  // half-width plus the series bound.
  const Rational mid((x.lo + x.hi) / 2);
  const Rational r(x.width() / 2);
  QInterval s = sin_q(mid, guard_digits);
  return {Rational(s.lo - r), Rational(s.hi + r)};
}

QInterval exp_i(const QInterval& x, unsigned guard_digits) {
  // exp is increasing; evaluate both ends.
  return {exp_q(x.lo, guard_digits).lo, exp_q(x.hi, guard_digits).hi};
}

QInterval sqrt_i(const QInterval& x, unsigned guard_digits) {
  if (sgn(x.lo) < 0) throw std::runtime_error("sqrt_i needs a nonneg interval");
  // floor/ceil integer square roots of the scaled endpoints
  const unsigned digits = guard_digits;
  const BigInt scale = exactreal::pow10(digits);
  const BigInt s2 = scale * scale;
  const BigInt lo_n = exactreal::floor_q(Rational(x.lo * s2));
  const BigInt hi_n = exactreal::ceil_q(Rational(x.hi * s2));
  const BigInt lo_r = exactreal::isqrt(lo_n);
  const BigInt hi_r = exactreal::isqrt(hi_n) + 1;
  return {Rational(lo_r, scale), Rational(hi_r, scale)};
}

BigInt scaled_floor(const std::function<QInterval(unsigned)>& produce,
                    unsigned digits) {
  for (unsigned guard = digits + 8;; guard *= 2) {
    const QInterval iv = produce(guard);
    const BigInt p = exactreal::pow10(digits);
    const BigInt lo = exactreal::floor_q(Rational(iv.lo * p));
    const BigInt hi = exactreal::floor_q(Rational(iv.hi * p));
    if (lo == hi) return lo;
    if (guard > 64 * (digits + 8))
      throw std::runtime_error("scaled_floor: interval straddles a boundary");
  }
}

BigInt isqrt_scaled(const BigInt& radicand, unsigned digits) {
  const BigInt p = exactreal::pow10(digits);
  return exactreal::isqrt(radicand * p * p);
}

BigInt parse_decimal_scaled(const std::string& s, unsigned& digits_out) {
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  unsigned frac = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      seen_point = true;
      continue;
    }
    if (s[i] < '0' || s[i] > '9')
      throw std::runtime_error("bad decimal string: " + s);
    digits += s[i];
    if (seen_point) ++frac;
  }
  BigInt v(digits.empty() ? "0" : digits, 10);
  digits_out = frac;
  return neg ? BigInt(-v) : v;
}

BigInt ulp_distance(const std::string& a, const std::string& b) {
  unsigned da = 0, db = 0;
  const BigInt va = parse_decimal_scaled(a, da);
  const BigInt vb = parse_decimal_scaled(b, db);
  if (da != db)
    throw std::runtime_error("ulp_distance on mismatched precisions: " + a +
                             " vs " + b);
  return BigInt(abs(va - vb));
}

std::string decimal_from_scaled(const BigInt& scaled, unsigned digits) {
  if (sgn(scaled) < 0) throw std::runtime_error("decimal_from_scaled: negative");
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace oracle
