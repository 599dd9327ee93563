#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "exactreal/completion.hpp"

namespace exactreal {

// Certificate that a real is at least 2^-n away from a reference point. A
// witness returned by the searches below certifies the defining inequality
//   2^-n < (y - x).approximate(2^-(n+1)),
// from which the true gap exceeds 2^-(n+1).
struct PosWitness {
  unsigned n;
};

enum class Side { lt, gt };

struct ApartWitness {
  Side side;  // Side::lt certifies x < y, Side::gt certifies y < x.
  PosWitness w;
};

// One-sided refutation test of non-negativity: false proves the value is
// negative; true for every eps is what non-negativity means.
template <class AQ>
bool nonneg_upto(const Real<AQ>& x, const PosRational& eps) {
  Rational v = x.ops().to_rational(x.approximate(eps));
  return -eps.to_mpq() <= v;
}

namespace detail {

// The witness inequality at level n, evaluated directly.
template <class AQ>
bool lt_witness_holds(const Real<AQ>& diff, unsigned n) {
  const AQ q = diff.approximate(PosRational::pow2(-(static_cast<std::int64_t>(n) + 1)));
  Rational gap = diff.ops().to_rational(q);
  return Rational(1, shift_left(BigInt(1), n)) < gap;
}

}  // namespace detail

// Bounded search for a strict-order witness, smallest level first. Some(n)
// certifies x < y (re-checkable by evaluation); None only means no witness
// exists at levels 0..n_max. If truly x < y, a large enough bound succeeds.
template <class AQ>
std::optional<PosWitness> find_lt_witness(const Real<AQ>& x, const Real<AQ>& y,
                                          unsigned n_max) {
  const Real<AQ> diff = y - x;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (detail::lt_witness_holds(diff, n)) return PosWitness{n};
  }
  return std::nullopt;
}

// Search both directions, alternating sides at each level so whichever
// inequality holds is found at its smallest level.
template <class AQ>
std::optional<ApartWitness> find_apartness(const Real<AQ>& x, const Real<AQ>& y,
                                           unsigned n_max) {
  const Real<AQ> fwd = y - x;
  const Real<AQ> bwd = x - y;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (detail::lt_witness_holds(fwd, n)) return ApartWitness{Side::lt, {n}};
    if (detail::lt_witness_holds(bwd, n)) return ApartWitness{Side::gt, {n}};
  }
  return std::nullopt;
}

// 1/x, given a witness of apartness from zero: w.side == Side::lt claims
// 0 < x, Side::gt claims x < 0, and w.w.n claims 2^-n <= |x|. The claim is
// checked by direct evaluation before use; a refuted witness is an error.
//
// The lift restricts t -> 1/t to the half-line |t| >= 2^-(n+1) on the
// witnessed side (approximants are clamped into it, which cannot move them
// away from the true value). On that region the map is Lipschitz with
// constant 2^(2n+2), giving the modulus eps * 2^-(2n+2).
template <class AQ>
Real<AQ> reciprocal(const Real<AQ>& x, const ApartWitness& w) {
  const AqOps<AQ>* o = &x.ops();
  const std::int64_t n = w.w.n;
  const bool positive = w.side == Side::lt;

  {
    // Refutation check: if the value is demonstrably closer to zero than the
    // witness claims, fail now rather than produce garbage.
    Rational v = o->to_rational(x.approximate(PosRational::pow2(-(n + 2))));
    if (!positive) v = -v;
    Rational slack(1, shift_left(BigInt(1), static_cast<unsigned long>(n + 2)));
    Rational claimed(1, shift_left(BigInt(1), static_cast<unsigned long>(n)));
    if (v + slack < claimed)
      throw witness_error("reciprocal witness 2^-" + std::to_string(w.w.n) +
                          " refuted by direct evaluation");
  }

  const AQ margin = o->shiftl(aq_one(*o), -(n + 1));
  UcFun<AQ> inv{
      [o, margin, positive](const AQ& a) {
        AQ t = positive
                   ? (o->compare(a, margin) < 0 ? margin : a)
                   : (o->compare(a, o->neg(margin)) > 0 ? o->neg(margin) : a);
        return Real<AQ>(*o, [o, t](const PosRational& eps) {
          return o->approx_div(aq_one(*o), t, eps.floor_log2());
        });
      },
      modulus_pow2(2 * n + 2)};
  return bind(inv, x);
}

// x / y by multiplying with the reciprocal; the sign and lower bound of y are
// discovered by apartness search. Failure to find a witness within n_max is
// reported as such (it does not prove y = 0).
template <class AQ>
Real<AQ> divide(const Real<AQ>& x, const Real<AQ>& y, unsigned n_max) {
  const auto w = find_apartness(real_zero(x.ops()), y, n_max);
  if (!w) {
    throw witness_error(
        "no apartness-from-zero witness for the divisor within n_max = " +
        std::to_string(n_max));
  }
  // A search witness at level n certifies |y| > 2^-(n+1).
  return x * reciprocal(y, ApartWitness{w->side, {w->w.n + 1}});
}

}  // namespace exactreal
