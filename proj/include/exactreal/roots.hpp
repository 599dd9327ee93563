#pragma once

#include <cstdint>

#include "exactreal/completion.hpp"
#include "exactreal/order.hpp"

namespace exactreal {

// State of the digit-per-step square root recurrence after n steps: starting
// from (a, 0), each step either takes a digit,
//   (r, s) -> ((r - (s+1)) << 2, (s+2) << 1)   when s + 1 <= r,
// or shifts, (r, s) -> (r << 2, s << 1). Everything is exact carrier
// arithmetic. For 1 <= a <= 4 the state satisfies, at every step,
//   s^2 + 4r = 4^(n+1) a,    0 <= r <= 2s + 4,    r <= 2^(3+n),
// so s * 2^-(n+1) increases to sqrt(a) with error at most 2^(1-n).
template <class AQ>
struct WolframState {
  AQ residual;     // r
  AQ scaled_root;  // s
  unsigned steps;
};

template <class AQ>
WolframState<AQ> wolfram_iterate(const AqOps<AQ>& o, const AQ& a, unsigned n) {
  const AQ one = aq_one(o);
  if (o.compare(a, one) < 0 || o.compare(a, o.inject_int(4)) > 0)
    throw domain_error("square root iteration needs 1 <= a <= 4");
  AQ r = a;
  AQ s = aq_zero(o);
  const AQ two = o.inject_int(2);
  for (unsigned i = 0; i < n; ++i) {
    const AQ s1 = o.add(s, one);
    if (o.compare(s1, r) <= 0) {
      r = o.shiftl(aq_sub(o, r, s1), 2);
      s = o.shiftl(o.add(s, two), 1);
    } else {
      r = o.shiftl(r, 2);
      s = o.shiftl(s, 1);
    }
  }
  return WolframState<AQ>{std::move(r), std::move(s), n};
}

// sqrt(a) for 1 <= a <= 4. A query at eps runs 2 - floor_log2(eps) steps
// (never fewer than one), two more than the one-bit-per-step rate needs.
template <class AQ>
Real<AQ> sqrt_core(const AqOps<AQ>& o, const AQ& a) {
  if (o.compare(a, aq_one(o)) < 0 || o.compare(a, o.inject_int(4)) > 0)
    throw domain_error("sqrt_core needs 1 <= a <= 4");
  return Real<AQ>(o, [&o, a](const PosRational& eps) {
    const std::int64_t e = eps.floor_log2();
    const std::int64_t n = e >= 1 ? 1 : 2 - e;
    const WolframState<AQ> st =
        wolfram_iterate(o, a, static_cast<unsigned>(n));
    return o.shiftl(st.scaled_root, -(n + 1));
  });
}

namespace detail {

inline std::int64_t floor_div2(std::int64_t v) {
  return v >= 0 ? v / 2 : (v - 1) / 2;
}

}  // namespace detail

// sqrt on the reals. Arguments are scaled by exact powers of 4 into [1, 4)
// before the core iteration and scaled back after; points at or below zero
// map to zero, which extends the function continuously and lets expressions
// like sqrt(x^2 - x^2) evaluate. An argument provably below zero (a coarse
// witness search finds it negative) is a domain error.
//
// sqrt is not Lipschitz at 0 but |sqrt u - sqrt v| <= sqrt|u - v| everywhere
// on [0, oo), so the square of the target precision is a valid modulus.
template <class AQ>
Real<AQ> sqrt(const Real<AQ>& x) {
  const AqOps<AQ>& o = x.ops();
  if (find_lt_witness(x, real_zero(o), 8))
    throw domain_error("square root of a provably negative value");
  UcFun<AQ> root{
      [&o](const AQ& a) -> Real<AQ> {
        if (aq_sign(o, a) <= 0) return real_zero(o);
        const std::int64_t m =
            detail::floor_div2(floor_log2_q(o.to_rational(a)));
        const AQ scaled = o.shiftl(a, -2 * m);
        return shift_by(sqrt_core(o, scaled), m);
      },
      [](const PosRational& e) { return e.squared(); }};
  return bind(root, x);
}

}  // namespace exactreal
