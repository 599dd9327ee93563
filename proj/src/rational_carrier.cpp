#include "exactreal/rational_carrier.hpp"

#include "exactreal/errors.hpp"

namespace exactreal {

ExactRational rat_approx(const ExactRational& x, std::int64_t k) {
  if (sgn(x) == 0) return x;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  if (k <= 0) {
    const unsigned long s = static_cast<unsigned long>(-k);
    BigInt m = div_trunc(shift_left(num, s), den);
    ExactRational r(std::move(m), shift_left(BigInt(1), s));
    r.canonicalize();
    return r;
  }
  BigInt m = div_trunc(num, shift_left(den, static_cast<unsigned long>(k)));
  return ExactRational(shift_left(m, static_cast<unsigned long>(k)));
}

ExactRational rat_approx_div(const ExactRational& x, const ExactRational& y,
                             std::int64_t k) {
  if (sgn(y) == 0) throw domain_error("approximate division by zero");
  return rat_approx(ExactRational(x / y), k);
}

ExactRational rat_pow(const ExactRational& x, unsigned long n) {
  if (n == 0) return ExactRational(1);
  ExactRational r(pow_ui(x.get_num(), n), pow_ui(x.get_den(), n));
  // num/den already coprime, so the powers are too.
  return r;
}

ExactRational rat_shiftl(const ExactRational& x, std::int64_t n) {
  ExactRational r;
  if (n >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(n));
  } else {
    mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-n));
  }
  return r;
}

std::strong_ordering rat_compare(const ExactRational& x, const ExactRational& y) {
  const int c = cmp(x, y);
  return c <=> 0;
}

}  // namespace exactreal
