#pragma once

#include <cstdint>

#include "exactreal/completion.hpp"
#include "exactreal/order.hpp"
#include "exactreal/series.hpp"
#include "exactreal/streams.hpp"

namespace exactreal {

// How far range reduction pushes series arguments: below 2^-k_reduce. Larger
// values trade more reduction steps for shorter series; 50 is a good default
// up to about a thousand decimals, 75 beyond that.
struct ReductionConfig {
  unsigned k_reduce = 50;
};

namespace detail {

// One squaring u -> u^2 on [0, 1], fused with a re-grid of the result so a
// chain of these keeps mantissas proportional to the requested precision.
// |u^2 - v^2| <= 2|u - v| on [0, 1], hence the modulus eps/2.
template <class AQ>
Real<AQ> square_unit_step(const Real<AQ>& x) {
  const AqOps<AQ>* o = &x.ops();
  UcFun<AQ> sq{
      [o](const AQ& a) {
        const AQ c = aq_clamp(*o, a, aq_zero(*o), aq_one(*o));
        return Real<AQ>(*o, [o, c](const PosRational& eps) {
          return o->approx(o->mul(c, c), eps.floor_log2());
        });
      },
      modulus_pow2(1)};
  return bind(sq, x);
}

// One triple-angle step u -> 3u - 4u^3 on [-1, 1], fused with a re-grid.
// The derivative 3 - 12u^2 is at most 9 in magnitude there: modulus eps/16.
template <class AQ>
Real<AQ> triple_angle_step(const Real<AQ>& x) {
  const AqOps<AQ>* o = &x.ops();
  UcFun<AQ> step{
      [o](const AQ& a) {
        const AQ one = aq_one(*o);
        const AQ c = aq_clamp(*o, a, o->neg(one), one);
        return Real<AQ>(*o, [o, c](const PosRational& eps) {
          const AQ cube = o->pow(c, 3);
          const AQ v = aq_sub(*o, o->mul(o->inject_int(3), c),
                              o->mul(o->inject_int(4), cube));
          return o->approx(v, eps.floor_log2());
        });
      },
      modulus_pow2(4)};
  return bind(step, x);
}

// Number of halvings taking |a| = 2^L-ish below 2^-k: L + 1 + k.
inline std::int64_t halvings_needed(std::int64_t floor_log2_abs, unsigned k) {
  const std::int64_t t = floor_log2_abs + 1 + static_cast<std::int64_t>(k);
  return t > 0 ? t : 0;
}

// Number of divisions by 3 taking |a| below 2^-k; 12/19 > log3(2), so
// ceil(12t/19) thirds suffice for t halvings' worth of reduction.
inline std::int64_t thirds_needed(std::int64_t floor_log2_abs, unsigned k) {
  const std::int64_t t = halvings_needed(floor_log2_abs, k);
  return (12 * t + 18) / 19;
}

}  // namespace detail

// atan(p/q) for 0 <= p <= q, q > 0, entirely through dual streams: the
// quotient is never formed, the engine divides p^(2i+1) by q^(2i+1)*(2i+1)
// at its own precision schedule.
template <class AQ>
Real<AQ> atan_ratio(const AqOps<AQ>& o, const AQ& p, const AQ& q) {
  DualStream<AQ> s{stream_odd_powers(o, p),
                   stream_zip_mul(o, stream_odd_powers(o, q), stream_odds(o))};
  return alternating_sum(o, std::move(s));
}

// pi from four arctangents of small rationals:
//   pi = 176*atan(1/57) + 28*atan(1/239) - 48*atan(1/682) + 96*atan(1/12943).
template <class AQ>
Real<AQ> pi_real(const AqOps<AQ>& o) {
  const AQ one = aq_one(o);
  const Real<AQ> t1 = scale_by(atan_ratio(o, one, o.inject_int(57)), 176);
  const Real<AQ> t2 = scale_by(atan_ratio(o, one, o.inject_int(239)), 28);
  const Real<AQ> t3 = scale_by(atan_ratio(o, one, o.inject_int(682)), 48);
  const Real<AQ> t4 = scale_by(atan_ratio(o, one, o.inject_int(12943)), 96);
  return t1 + t2 - t3 + t4;
}

// e^a for a carrier point a, over the whole line.
//
// a <= 0: halve a (exact shifts) until it sits below 2^-k_reduce, sum the
// alternating series sum (-1)^i |x|^i / i!, then square the result back up,
// one fused squaring per halving. a > 0: invert the negative case; the
// witness 2^-2*ceil(a) <= e^-a holds because e^-a >= 4^-a.
template <class AQ>
Real<AQ> exp_point(const AqOps<AQ>& o, const AQ& a, ReductionConfig cfg = {}) {
  const unsigned kr = cfg.k_reduce < 1 ? 1 : cfg.k_reduce;
  const int sign = aq_sign(o, a);
  if (sign > 0) {
    const BigInt c = ceil_q(o.to_rational(a));
    if (c > (BigInt(1) << 30))
      throw resource_error("exp argument too large to witness a lower bound");
    const unsigned n = 2 * static_cast<unsigned>(c.get_ui());
    return reciprocal(exp_point(o, o.neg(a), cfg),
                      ApartWitness{Side::lt, {n}});
  }
  std::int64_t m = 0;
  if (sign != 0) {
    m = detail::halvings_needed(floor_log2_q(Rational(abs(o.to_rational(a)))), kr);
  }
  const AQ x = o.shiftl(a, -m);
  DualStream<AQ> s{stream_powers(o, o.abs(x)), stream_factorials(o)};
  Real<AQ> r = alternating_sum(o, std::move(s));
  for (std::int64_t i = 0; i < m; ++i) r = detail::square_unit_step(r);
  return r;
}

// sin(a) for a carrier point. |a| is divided by 3 until it sits below
// 2^-k_reduce; the divisions never happen on the carrier — the series
// denominators absorb the 3^m(2i+1) factor — and each reduction unwinds as
// one fused triple-angle step. The sign comes out front since sin is odd.
template <class AQ>
Real<AQ> sin_point(const AqOps<AQ>& o, const AQ& a, ReductionConfig cfg = {}) {
  const unsigned kr = cfg.k_reduce < 1 ? 1 : cfg.k_reduce;
  const int sign = aq_sign(o, a);
  if (sign == 0) return real_zero(o);
  const AQ y = o.abs(a);
  const std::int64_t m =
      detail::thirds_needed(floor_log2_q(Rational(abs(o.to_rational(y)))), kr);
  StreamFactory<AQ> dens = stream_every_other(stream_factorials(o), 1);
  if (m > 0) {
    const AQ three_m = o.pow(o.inject_int(3), static_cast<unsigned long>(m));
    dens = stream_zip_mul(o, stream_odd_powers(o, three_m), std::move(dens));
  }
  DualStream<AQ> s{stream_odd_powers(o, y), std::move(dens)};
  Real<AQ> r = alternating_sum(o, std::move(s));
  for (std::int64_t i = 0; i < m; ++i) r = detail::triple_angle_step(r);
  return sign < 0 ? -r : r;
}

// cos(a) = 1 - 2 sin(a/2)^2; the halving is an exact shift. The final
// polynomial step is fused like the others (derivative -4u on [-1,1]).
template <class AQ>
Real<AQ> cos_point(const AqOps<AQ>& o, const AQ& a, ReductionConfig cfg = {}) {
  Real<AQ> s = sin_point(o, o.shiftl(a, -1), cfg);
  UcFun<AQ> fold{
      [&o](const AQ& u) {
        const AQ one = aq_one(o);
        const AQ c = aq_clamp(o, u, o.neg(one), one);
        return Real<AQ>(o, [&o, c](const PosRational& eps) {
          const AQ v = aq_sub(o, aq_one(o), o.shiftl(o.mul(c, c), 1));
          return o.approx(v, eps.floor_log2());
        });
      },
      modulus_pow2(2)};
  return bind(fold, s);
}

// atan(a) for a carrier point. The series runs directly for |a| <= 1/2; for
// 1/2 < |a| < 2 one pass of atan(t) = pi/4 + atan((t-1)/(t+1)) shrinks the
// argument toward 0, and for |a| >= 2 atan(t) = pi/2 - atan(1/t) applies,
// both through dual streams so no carrier division is needed. Odd symmetry
// handles negative arguments.
template <class AQ>
Real<AQ> atan_point(const AqOps<AQ>& o, const AQ& a) {
  const int sign = aq_sign(o, a);
  if (sign == 0) return real_zero(o);
  const AQ y = o.abs(a);
  const AQ one = aq_one(o);
  Real<AQ> r = real_zero(o);
  if (o.compare(y, o.shiftl(one, -1)) <= 0) {
    r = atan_ratio(o, y, one);
  } else if (o.compare(y, o.inject_int(2)) < 0) {
    const AQ p = aq_sub(o, y, one);
    const AQ q = o.add(y, one);
    const int psign = aq_sign(o, p);
    Real<AQ> inner = psign == 0 ? real_zero(o) : atan_ratio(o, o.abs(p), q);
    if (psign < 0) inner = -inner;
    r = shift_by(pi_real(o), -2) + inner;
  } else {
    r = shift_by(pi_real(o), -1) - atan_ratio(o, one, y);
  }
  return sign < 0 ? -r : r;
}

// Lifts to functions on the reals. sin, cos and atan are Lipschitz-1, so the
// identity modulus works; exp needs a bound first: with c an integer upper
// bound of the argument, the derivative up to c+1 is below 2^(3c/2 + 3), and
// the modulus is additionally capped at 1 so approximants stay near the
// bounded region.
template <class AQ>
Real<AQ> exp(const Real<AQ>& x, ReductionConfig cfg = {}) {
  const AqOps<AQ>& o = x.ops();
  const BigInt c = ceil_q(o.to_rational(x.approximate(PosRational::one()))) + 1;
  if (c > (BigInt(1) << 40))
    throw resource_error("exp argument too large to bound");
  const std::int64_t c64 = static_cast<std::int64_t>(c.get_si());
  const std::int64_t shift = (c64 > 0 ? (3 * c64 + 1) / 2 : 0) + 3;
  Modulus mu = [shift](const PosRational& e) {
    return PosRational::min(e.scaled_pow2(-shift), PosRational::one());
  };
  return bind(UcFun<AQ>{[&o, cfg](const AQ& a) { return exp_point(o, a, cfg); },
                        std::move(mu)},
              x);
}

template <class AQ>
Real<AQ> sin(const Real<AQ>& x, ReductionConfig cfg = {}) {
  const AqOps<AQ>& o = x.ops();
  return bind(UcFun<AQ>{[&o, cfg](const AQ& a) { return sin_point(o, a, cfg); },
                        modulus_id()},
              x);
}

template <class AQ>
Real<AQ> cos(const Real<AQ>& x, ReductionConfig cfg = {}) {
  const AqOps<AQ>& o = x.ops();
  return bind(UcFun<AQ>{[&o, cfg](const AQ& a) { return cos_point(o, a, cfg); },
                        modulus_id()},
              x);
}

template <class AQ>
Real<AQ> atan(const Real<AQ>& x) {
  const AqOps<AQ>& o = x.ops();
  return bind(UcFun<AQ>{[&o](const AQ& a) { return atan_point(o, a); },
                        modulus_id()},
              x);
}

}  // namespace exactreal
