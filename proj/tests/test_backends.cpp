#include <random>
#include <vector>

#include "doctest.h"
#include "exactreal/aq_ops.hpp"
#include "exactreal/errors.hpp"
#include "helpers.hpp"

using namespace exactreal;

namespace {

Rational pow2q(std::int64_t k) {
  if (k >= 0) return Rational(shift_left(BigInt(1), k));
  return Rational(1, shift_left(BigInt(1), -k));
}

}  // namespace

TEST_CASE("rational carrier approx keeps results on a dyadic grid") {
  CHECK(rat_approx(ExactRational(1, 3), -4) == ExactRational(5, 16));
  CHECK(rat_approx(ExactRational(7, 8), -10) == ExactRational(7, 8));

  std::mt19937_64 rng(0x5eed0101);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = testgen::random_rational(rng);
    std::uniform_int_distribution<int> kd(-80, 40);
    const std::int64_t k = kd(rng);
    const ExactRational r = rat_approx(x, k);
    CHECK(abs(Rational(r - x)) <= pow2q(k));
    // denominator divides 2^-k
    if (k < 0) {
      BigInt rem, den2 = shift_left(BigInt(1), -k);
      mpz_tdiv_r(rem.get_mpz_t(), den2.get_mpz_t(), r.get_den().get_mpz_t());
      CHECK(rem == 0);
    } else {
      CHECK(r.get_den() == 1);
    }
  }
}

TEST_CASE("rational carrier approximate division") {
  CHECK(rat_approx_div(ExactRational(1), ExactRational(3), -4) ==
        ExactRational(5, 16));
  CHECK(rat_approx_div(ExactRational(4), ExactRational(2), -10) ==
        ExactRational(2));
  CHECK_THROWS_AS(rat_approx_div(ExactRational(1), ExactRational(0), -4),
                  domain_error);

  std::mt19937_64 rng(0x5eed0102);
  for (int i = 0; i < 500; ++i) {
    const Rational x = testgen::random_rational(rng);
    const ExactRational r = rat_approx_div(x, ExactRational(1), -30);
    CHECK(abs(Rational(r - x)) <= pow2q(-30));
  }
}

// The dictionary law suite, written once and instantiated for both carriers.
template <class AQ>
void check_dictionary_laws(const AqOps<AQ>& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 400; ++i) {
    const Rational qa = testgen::random_rational(rng, 48);
    const Rational qb = testgen::random_rational(rng, 48);
    const PosRational eps = testgen::random_eps(rng);
    const AQ a = o.from_rational_within(qa, eps);
    const AQ b = o.from_rational_within(qb, eps);

    // density
    CHECK(abs(Rational(o.to_rational(a) - qa)) <= eps.to_mpq());

    // ring morphism under to_rational
    CHECK(o.to_rational(o.add(a, b)) ==
          Rational(o.to_rational(a) + o.to_rational(b)));
    CHECK(o.to_rational(o.mul(a, b)) ==
          Rational(o.to_rational(a) * o.to_rational(b)));
    CHECK(o.to_rational(o.neg(a)) == Rational(-o.to_rational(a)));
    CHECK(o.to_rational(o.abs(a)) == abs(o.to_rational(a)));

    // order embedding
    const int want = cmp(o.to_rational(a), o.to_rational(b));
    const auto got = o.compare(a, b);
    CHECK((want < 0) == (got < 0));
    CHECK((want == 0) == (got == 0));

    // shift and power semantics
    std::uniform_int_distribution<int> nd(-20, 20);
    const std::int64_t n = nd(rng);
    CHECK(o.to_rational(o.shiftl(a, n)) ==
          Rational(o.to_rational(a) * pow2q(n)));
    std::uniform_int_distribution<unsigned> pd(0, 5);
    const unsigned long p = pd(rng);
    Rational want_pow(1);
    for (unsigned long j = 0; j < p; ++j) want_pow *= o.to_rational(a);
    CHECK(o.to_rational(o.pow(a, p)) == want_pow);

    // approximation contracts
    std::uniform_int_distribution<int> kd(-70, 20);
    const std::int64_t k = kd(rng);
    CHECK(abs(Rational(o.to_rational(o.approx(a, k)) - o.to_rational(a))) <=
          pow2q(k));
    if (aq_sign(o, b) != 0) {
      const Rational exact(o.to_rational(a) / o.to_rational(b));
      CHECK(abs(Rational(o.to_rational(o.approx_div(a, b, k)) - exact)) <=
            pow2q(k));
    }

    // integer embedding is a ring morphism on sampled points
    std::uniform_int_distribution<long> zd(-1000, 1000);
    const long za = zd(rng), zb = zd(rng);
    CHECK(o.to_rational(o.add(o.inject_int(za), o.inject_int(zb))) ==
          Rational(za + zb));
    CHECK(o.to_rational(o.mul(o.inject_int(za), o.inject_int(zb))) ==
          Rational(za * zb));
  }
}

TEST_CASE("dictionary laws: dyadic backend") {
  check_dictionary_laws(dyadic_ops(), 0x5eed0103);
}

TEST_CASE("dictionary laws: rational backend") {
  check_dictionary_laws(exact_rational_ops(), 0x5eed0104);
}

namespace {

// A random straight-line program over {+, *, -, <<, approx_div, approx},
// evaluated in one carrier while an exact-rational shadow tracks the value
// and the worst-case accumulated error width.
struct ShadowSlot {
  Rational exact;
  Rational width;  // certified |carrier - exact| bound
};

template <class AQ>
void run_differential_program(const AqOps<AQ>& o, std::mt19937_64& rng,
                              std::vector<AQ>& vals,
                              std::vector<ShadowSlot>& shadow) {
  std::uniform_int_distribution<int> op_dist(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
  const int op = op_dist(rng);
  const std::size_t i = pick(rng), j = pick(rng);
  switch (op) {
    case 0:
      vals.push_back(o.add(vals[i], vals[j]));
      shadow.push_back({Rational(shadow[i].exact + shadow[j].exact),
                        Rational(shadow[i].width + shadow[j].width)});
      break;
    case 1: {
      vals.push_back(o.mul(vals[i], vals[j]));
      // |ab' - AB| <= |a||b'-B| + |B||a-A| + widths^2 term, folded in
      const Rational ma(abs(shadow[i].exact) + shadow[i].width);
      const Rational mb(abs(shadow[j].exact));
      shadow.push_back(
          {Rational(shadow[i].exact * shadow[j].exact),
           Rational(ma * shadow[j].width + mb * shadow[i].width)});
      break;
    }
    case 2:
      vals.push_back(o.neg(vals[i]));
      shadow.push_back({Rational(-shadow[i].exact), shadow[i].width});
      break;
    case 3: {
      std::uniform_int_distribution<int> sd(-8, 8);
      const std::int64_t n = sd(rng);
      vals.push_back(o.shiftl(vals[i], n));
      shadow.push_back({Rational(shadow[i].exact * pow2q(n)),
                        Rational(shadow[i].width * pow2q(n))});
      break;
    }
    case 4: {
      std::uniform_int_distribution<int> kd(-60, -20);
      const std::int64_t k = kd(rng);
      vals.push_back(o.approx(vals[i], k));
      shadow.push_back(
          {shadow[i].exact, Rational(shadow[i].width + pow2q(k))});
      break;
    }
    default: {
      // guard against tiny divisors so the shadow bound stays useful
      if (abs(shadow[j].exact) < 1 || shadow[j].width * 4 > 1) {
        vals.push_back(vals[i]);
        shadow.push_back(shadow[i]);
        break;
      }
      std::uniform_int_distribution<int> kd(-60, -20);
      const std::int64_t k = kd(rng);
      vals.push_back(o.approx_div(vals[i], vals[j], k));
      // |div(a,b) - A/B| <= 2^k + |a/b - A/B|;
      // |a/b - A/B| <= (|A| wb + |B| wa) / (|B| (|B| - wb))
      const Rational A(abs(shadow[i].exact)), B(abs(shadow[j].exact));
      const Rational wa = shadow[i].width, wb = shadow[j].width;
      const Rational denom(B * (B - wb));
      shadow.push_back({Rational(shadow[i].exact / shadow[j].exact),
                        Rational(pow2q(k) + (A * wb + B * wa) / denom)});
      break;
    }
  }
}

}  // namespace

TEST_CASE("differential testing: both backends track the exact shadow") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::mt19937_64 rng_d(seed), rng_r(seed), rng_init(seed * 977);
    std::vector<Dyadic> dy;
    std::vector<ExactRational> ra;
    std::vector<ShadowSlot> sh_d, sh_r;
    for (int i = 0; i < 4; ++i) {
      std::uniform_int_distribution<long> vd(-50, 50);
      const long v = vd(rng_init);
      dy.push_back(dyadic_ops().inject_int(v));
      ra.push_back(exact_rational_ops().inject_int(v));
      sh_d.push_back({Rational(v), Rational(0)});
      sh_r.push_back({Rational(v), Rational(0)});
    }
    for (int step = 0; step < 25; ++step) {
      run_differential_program(dyadic_ops(), rng_d, dy, sh_d);
      run_differential_program(exact_rational_ops(), rng_r, ra, sh_r);
    }
    for (std::size_t i = 0; i < dy.size(); ++i) {
      // identical programs: identical shadows
      CHECK(sh_d[i].exact == sh_r[i].exact);
      const Rational vd = dyadic_ops().to_rational(dy[i]);
      const Rational vr = exact_rational_ops().to_rational(ra[i]);
      CHECK(abs(Rational(vd - sh_d[i].exact)) <= sh_d[i].width);
      CHECK(abs(Rational(vr - sh_r[i].exact)) <= sh_r[i].width);
      // and the backends differ by at most the two error budgets combined
      CHECK(abs(Rational(vd - vr)) <= Rational(sh_d[i].width + sh_r[i].width));
    }
  }
}
