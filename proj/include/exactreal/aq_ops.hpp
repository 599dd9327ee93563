#pragma once

#include <compare>
#include <cstdint>

#include "exactreal/bigint.hpp"
#include "exactreal/dyadic.hpp"
#include "exactreal/posrational.hpp"
#include "exactreal/rational_carrier.hpp"

namespace exactreal {

// Capability record for a carrier of approximate rationals: a dense ordered
// ring with exact +, *, -, shifts and powers, decidable comparison, and
// approximate division / re-gridding with 2^k error bounds.
//
// The record is an explicit value-level dictionary (plain function pointers)
// rather than a compile-time concept so the CLI can pick a backend at
// runtime; generic code takes `const AqOps<AQ>&` alongside the values.
template <class AQ>
struct AqOps {
  using carrier_type = AQ;

  const char* name;

  AQ (*add)(const AQ&, const AQ&);
  AQ (*mul)(const AQ&, const AQ&);
  AQ (*neg)(const AQ&);
  AQ (*abs)(const AQ&);
  AQ (*pow)(const AQ&, unsigned long);
  AQ (*shiftl)(const AQ&, std::int64_t);
  std::strong_ordering (*compare)(const AQ&, const AQ&);

  // |approx_div(x, y, k) - x/y| <= 2^k, y != 0.
  AQ (*approx_div)(const AQ&, const AQ&, std::int64_t);
  // |approx(x, k) - x| <= 2^k, with the result's size bounded by the grid.
  AQ (*approx)(const AQ&, std::int64_t);

  AQ (*inject_int)(const BigInt&);
  Rational (*to_rational)(const AQ&);
  // |to_rational(result) - q| <= eps (the dense embedding).
  AQ (*from_rational_within)(const Rational&, const PosRational&);
};

const AqOps<Dyadic>& dyadic_ops();
const AqOps<ExactRational>& exact_rational_ops();

// Small derived helpers shared by the generic layers.

template <class AQ>
AQ aq_zero(const AqOps<AQ>& o) {
  return o.inject_int(0);
}

template <class AQ>
AQ aq_one(const AqOps<AQ>& o) {
  return o.inject_int(1);
}

template <class AQ>
AQ aq_sub(const AqOps<AQ>& o, const AQ& x, const AQ& y) {
  return o.add(x, o.neg(y));
}

template <class AQ>
int aq_sign(const AqOps<AQ>& o, const AQ& x) {
  const auto c = o.compare(x, aq_zero(o));
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

template <class AQ>
AQ aq_clamp(const AqOps<AQ>& o, const AQ& x, const AQ& lo, const AQ& hi) {
  if (o.compare(x, lo) < 0) return lo;
  if (o.compare(x, hi) > 0) return hi;
  return x;
}

// Smallest e with |x| <= 2^e (x != 0), via the exact rational view.
template <class AQ>
std::int64_t aq_ceil_log2_abs(const AqOps<AQ>& o, const AQ& x) {
  return ceil_log2_q(Rational(::abs(o.to_rational(x))));
}

}  // namespace exactreal
