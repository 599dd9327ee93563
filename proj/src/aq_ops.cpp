#include "exactreal/aq_ops.hpp"

namespace exactreal {

const AqOps<Dyadic>& dyadic_ops() {
  static const AqOps<Dyadic> ops = {
      "dyadic",
      [](const Dyadic& x, const Dyadic& y) { return x + y; },
      [](const Dyadic& x, const Dyadic& y) { return x * y; },
      [](const Dyadic& x) { return -x; },
      [](const Dyadic& x) { return abs(x); },
      [](const Dyadic& x, unsigned long n) { return pow(x, n); },
      [](const Dyadic& x, std::int64_t n) { return shiftl(x, n); },
      [](const Dyadic& x, const Dyadic& y) { return compare(x, y); },
      [](const Dyadic& x, const Dyadic& y, std::int64_t k) {
        return approx_div(x, y, k);
      },
      [](const Dyadic& x, std::int64_t k) { return approx(x, k); },
      [](const BigInt& v) { return from_int(v); },
      [](const Dyadic& x) { return x.to_rational(); },
      [](const Rational& q, const PosRational& eps) {
        return from_rational_within(q, eps);
      },
  };
  return ops;
}

const AqOps<ExactRational>& exact_rational_ops() {
  static const AqOps<ExactRational> ops = {
      "rational",
      [](const ExactRational& x, const ExactRational& y) {
        return ExactRational(x + y);
      },
      [](const ExactRational& x, const ExactRational& y) {
        return ExactRational(x * y);
      },
      [](const ExactRational& x) { return ExactRational(-x); },
      [](const ExactRational& x) { return ExactRational(abs(x)); },
      [](const ExactRational& x, unsigned long n) { return rat_pow(x, n); },
      [](const ExactRational& x, std::int64_t n) { return rat_shiftl(x, n); },
      [](const ExactRational& x, const ExactRational& y) {
        return rat_compare(x, y);
      },
      [](const ExactRational& x, const ExactRational& y, std::int64_t k) {
        return rat_approx_div(x, y, k);
      },
      [](const ExactRational& x, std::int64_t k) { return rat_approx(x, k); },
      [](const BigInt& v) { return ExactRational(v); },
      [](const ExactRational& x) { return x; },
      // The carrier is already exact, so the dense embedding is the identity.
      [](const Rational& q, const PosRational&) { return ExactRational(q); },
  };
  return ops;
}

}  // namespace exactreal
