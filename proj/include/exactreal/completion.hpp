#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "exactreal/aq_ops.hpp"
#include "exactreal/errors.hpp"
#include "exactreal/posrational.hpp"

namespace exactreal {

// |x - y| <= eps on the carrier, decided exactly through the rational view.
template <class AQ>
bool ball(const AqOps<AQ>& o, const PosRational& eps, const AQ& x, const AQ& y) {
  Rational d = o.to_rational(x) - o.to_rational(y);
  return Rational(abs(d)) <= eps.to_mpq();
}

// A real number, represented as a regular function: approximate(eps) returns
// a carrier value within eps of the represented point, and any two
// approximations at eps1, eps2 lie within eps1 + eps2 of each other.
//
// The closure is immutable and evaluation is pure; copies share the
// underlying state, so Reals are cheap to pass around and safe to evaluate
// from several threads at once.
template <class AQ>
class Real {
 public:
  using ApproxFn = std::function<AQ(const PosRational&)>;

  Real(const AqOps<AQ>& ops, ApproxFn fn)
      : impl_(std::make_shared<const Impl>(Impl{&ops, std::move(fn)})) {}

  AQ approximate(const PosRational& eps) const { return impl_->fn(eps); }
  const AqOps<AQ>& ops() const { return *impl_->ops; }

 private:
  struct Impl {
    const AqOps<AQ>* ops;
    ApproxFn fn;
  };
  std::shared_ptr<const Impl> impl_;
};

// Sufficient input precision for a requested output precision.
using Modulus = std::function<PosRational(const PosRational&)>;

inline Modulus modulus_id() {
  return [](const PosRational& e) { return e; };
}

// eps * 2^-shift
inline Modulus modulus_pow2(std::int64_t shift) {
  return [shift](const PosRational& e) { return e.scaled_pow2(-shift); };
}

// A function from the carrier into the reals, uniformly continuous with the
// given modulus: inputs within modulus(eps) give outputs within eps. This is
// exactly the data needed to lift it through the completion.
template <class AQ>
struct UcFun {
  std::function<Real<AQ>(const AQ&)> apply;
  Modulus modulus;
};

// The embedding: every approximation is the point itself.
template <class AQ>
Real<AQ> constant(const AqOps<AQ>& o, AQ a) {
  return Real<AQ>(o, [a = std::move(a)](const PosRational&) { return a; });
}

template <class AQ>
Real<AQ> real_zero(const AqOps<AQ>& o) {
  return constant(o, aq_zero(o));
}

// The rational q as a real, through the dense embedding.
template <class AQ>
Real<AQ> from_rational(const AqOps<AQ>& o, Rational q) {
  return Real<AQ>(o, [&o, q = std::move(q)](const PosRational& eps) {
    return o.from_rational_within(q, eps);
  });
}

// Lift f through the completion: query the argument at modulus(eps/2), apply,
// and evaluate the resulting real at eps/2.
template <class AQ>
Real<AQ> bind(const UcFun<AQ>& f, const Real<AQ>& x) {
  const AqOps<AQ>& o = x.ops();
  return Real<AQ>(o, [f, x](const PosRational& eps) {
    const PosRational half = eps.half();
    return f.apply(x.approximate(f.modulus(half))).approximate(half);
  });
}

// bind composed with the embedding, for carrier-to-carrier functions.
template <class AQ>
Real<AQ> map(std::function<AQ(const AQ&)> f, Modulus mu, const Real<AQ>& x) {
  const AqOps<AQ>& o = x.ops();
  return Real<AQ>(o, [f = std::move(f), mu = std::move(mu), x](const PosRational& eps) {
    return f(x.approximate(mu(eps.half())));
  });
}

// Binary lifting; each argument is queried at its own modulus of eps/2, so
// the images are each within eps/2 of the true value.
template <class AQ>
Real<AQ> map2(std::function<AQ(const AQ&, const AQ&)> f, Modulus mu1, Modulus mu2,
              const Real<AQ>& x, const Real<AQ>& y) {
  assert(&x.ops() == &y.ops());
  const AqOps<AQ>& o = x.ops();
  return Real<AQ>(o, [f = std::move(f), mu1 = std::move(mu1), mu2 = std::move(mu2),
                      x, y](const PosRational& eps) {
    const PosRational half = eps.half();
    return f(x.approximate(mu1(half)), y.approximate(mu2(half)));
  });
}

template <class AQ>
Real<AQ> operator+(const Real<AQ>& x, const Real<AQ>& y) {
  const AqOps<AQ>* o = &x.ops();
  return map2<AQ>([o](const AQ& a, const AQ& b) { return o->add(a, b); },
                  modulus_pow2(1), modulus_pow2(1), x, y);
}

template <class AQ>
Real<AQ> operator-(const Real<AQ>& x) {
  const AqOps<AQ>* o = &x.ops();
  return map<AQ>([o](const AQ& a) { return o->neg(a); }, modulus_id(), x);
}

template <class AQ>
Real<AQ> operator-(const Real<AQ>& x, const Real<AQ>& y) {
  const AqOps<AQ>* o = &x.ops();
  return map2<AQ>([o](const AQ& a, const AQ& b) { return aq_sub(*o, a, b); },
                  modulus_pow2(1), modulus_pow2(1), x, y);
}

// Multiplication is lifted on a bounded region. From one coarse approximation
// of each factor we get B = 2^bexp with |x|, |y| <= B - 1; clamping the
// approximants into [-B, B] keeps them in the region without moving them
// further from the true values. There
//   |c(xa)*c(ya) - x*y| <= B*|c(xa) - x| + B*|c(ya) - y|,
// so querying each factor at eps * 2^-(bexp+2) gives a product within eps/2.
template <class AQ>
Real<AQ> operator*(const Real<AQ>& x, const Real<AQ>& y) {
  const AqOps<AQ>* o = &x.ops();
  const AQ cx = o->abs(x.approximate(PosRational::one()));
  const AQ cy = o->abs(y.approximate(PosRational::one()));
  const AQ& cmax = o->compare(cx, cy) >= 0 ? cx : cy;
  const std::int64_t bexp = ceil_log2_q(Rational(o->to_rational(cmax) + 2));
  const AQ bound = o->shiftl(aq_one(*o), bexp);
  const AQ lo = o->neg(bound);
  auto mul = [o, lo, bound](const AQ& a, const AQ& b) {
    return o->mul(aq_clamp(*o, a, lo, bound), aq_clamp(*o, b, lo, bound));
  };
  return map2<AQ>(std::move(mul), modulus_pow2(bexp + 1), modulus_pow2(bexp + 1),
                  x, y);
}

// x * 2^n, exact on the carrier; Lipschitz constant 2^n.
template <class AQ>
Real<AQ> shift_by(const Real<AQ>& x, std::int64_t n) {
  const AqOps<AQ>* o = &x.ops();
  return map<AQ>([o, n](const AQ& a) { return o->shiftl(a, n); },
                 modulus_pow2(n), x);
}

// x * c for a machine-integer constant.
template <class AQ>
Real<AQ> scale_by(const Real<AQ>& x, std::int64_t c) {
  const AqOps<AQ>* o = &x.ops();
  if (c == 0) return real_zero(*o);
  const std::int64_t mag = c < 0 ? -c : c;
  std::int64_t lip = 0;  // smallest power of two >= |c|
  while ((std::int64_t(1) << lip) < mag) ++lip;
  const AQ k = o->inject_int(BigInt(static_cast<long>(c)));
  return map<AQ>([o, k](const AQ& a) { return o->mul(k, a); },
                 modulus_pow2(lip), x);
}

// Value-preserving re-approximation: the result approximates the same point,
// but each query returns a value trimmed onto the 2^floor_log2(eps) grid, so
// internal sizes stay proportional to the precision actually requested.
template <class AQ>
Real<AQ> compress(const Real<AQ>& x) {
  const AqOps<AQ>* o = &x.ops();
  UcFun<AQ> trim{
      [o](const AQ& a) {
        return Real<AQ>(*o, [o, a](const PosRational& eps) {
          return o->approx(a, eps.floor_log2());
        });
      },
      modulus_id()};
  return bind(trim, x);
}

// Decimal rendering with |printed - value| <= 10^-digits: query at half an
// ulp, then round half away from zero. Only the last digit can differ from
// the true rounding.
template <class AQ>
std::string to_decimal(const Real<AQ>& x, unsigned digits) {
  const AqOps<AQ>& o = x.ops();
  const AQ q = x.approximate(PosRational::decimal_grade(digits));
  Rational scaled = o.to_rational(q) * Rational(pow10(digits));
  BigInt n = round_half_away(scaled);
  const bool neg = sgn(n) < 0;
  std::string s = BigInt(abs(n)).get_str();
  if (digits == 0) return (neg ? "-" : "") + s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

}  // namespace exactreal
