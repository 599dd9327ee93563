#pragma once

// Shared generators for the property tests. All randomness is seeded per
// call site so failures reproduce.

#include <random>

#include "exactreal/aq_ops.hpp"
#include "exactreal/completion.hpp"
#include "exactreal/dyadic.hpp"
#include "exactreal/posrational.hpp"

namespace testgen {

using exactreal::BigInt;
using exactreal::Dyadic;
using exactreal::PosRational;
using exactreal::Rational;

inline BigInt random_bigint(std::mt19937_64& rng, unsigned max_bits) {
  std::uniform_int_distribution<unsigned> bits_dist(0, max_bits);
  const unsigned bits = bits_dist(rng);
  BigInt v = 0;
  for (unsigned i = 0; i < bits; i += 32) {
    v <<= 32;
    v += static_cast<unsigned long>(rng() & 0xffffffffu);
  }
  if (bits > 0) v = BigInt(v % (BigInt(1) << bits));
  if (rng() & 1) v = -v;
  return v;
}

inline Dyadic random_dyadic(std::mt19937_64& rng, unsigned max_bits = 96,
                            int expo_range = 64) {
  std::uniform_int_distribution<int> expo_dist(-expo_range, expo_range);
  return Dyadic(random_bigint(rng, max_bits), expo_dist(rng));
}

inline Dyadic random_nonzero_dyadic(std::mt19937_64& rng, unsigned max_bits = 96,
                                    int expo_range = 64) {
  for (;;) {
    Dyadic d = random_dyadic(rng, max_bits, expo_range);
    if (!d.is_zero()) return d;
  }
}

inline Rational random_rational(std::mt19937_64& rng, unsigned max_bits = 64) {
  BigInt num = random_bigint(rng, max_bits);
  BigInt den = abs(random_bigint(rng, max_bits)) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline PosRational random_eps(std::mt19937_64& rng, int min_exp = -96,
                              int max_exp = 0) {
  std::uniform_int_distribution<int> e(min_exp, max_exp);
  return PosRational::pow2(e(rng));
}

}  // namespace testgen
