#pragma once

#include <compare>
#include <cstdint>

#include "exactreal/bigint.hpp"
#include "exactreal/posrational.hpp"

namespace exactreal {

// Exact arbitrary-precision rationals as a second carrier, used mainly for
// differential testing against the dyadic backend. GMP keeps values in lowest
// terms with a positive denominator.
using ExactRational = Rational;

// A value within 2^k of x whose denominator divides 2^-k: shift, truncate the
// numerator, shift back. This is what keeps intermediate results small.
ExactRational rat_approx(const ExactRational& x, std::int64_t k);

// A value within 2^k of x/y; exact division followed by rat_approx.
// Throws domain_error when y = 0.
ExactRational rat_approx_div(const ExactRational& x, const ExactRational& y,
                             std::int64_t k);

ExactRational rat_pow(const ExactRational& x, unsigned long n);

// x * 2^n, exact.
ExactRational rat_shiftl(const ExactRational& x, std::int64_t n);

std::strong_ordering rat_compare(const ExactRational& x, const ExactRational& y);

}  // namespace exactreal
