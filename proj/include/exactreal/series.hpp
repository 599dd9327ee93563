#pragma once

#include <cstdint>
#include <vector>

#include "exactreal/completion.hpp"
#include "exactreal/errors.hpp"
#include "exactreal/streams.hpp"

namespace exactreal {

// Infinite alternating sums sum_i (-1)^i n_i/d_i over dual lazy streams.
// Callers guarantee the term sequence n_i/d_i is non-negative, weakly
// decreasing, and tends to 0; then the tail after k terms is at most term k.
//
// All precision bookkeeping is done in binary exponents, so the engine runs
// entirely on the carrier: no rational arithmetic anywhere on this path.

namespace detail {

inline unsigned long term_search_cap(std::int64_t eps_exp) {
  const std::int64_t mag = eps_exp < 0 ? -eps_exp : eps_exp;
  return static_cast<unsigned long>(64 * mag + 65536);
}

// Smallest k such that approx_div(n_k, d_k, l) + 2^l <= 2^(eps_exp - 1) with
// l = eps_exp - (k+1); that certifies term k <= eps/2 at division grade l.
// Forces exactly k+1 elements of each stream into the caches.
template <class AQ>
unsigned find_terms_cached(const AqOps<AQ>& o, StreamGen<AQ>& nums,
                           StreamGen<AQ>& dens, std::int64_t eps_exp,
                           std::vector<AQ>& ncache, std::vector<AQ>& dcache) {
  const unsigned long cap = term_search_cap(eps_exp);
  for (unsigned long k = 0;; ++k) {
    if (k > cap) {
      throw resource_error(
          "alternating series did not meet its tail bound within " +
          std::to_string(cap) + " terms");
    }
    ncache.push_back(nums());
    dcache.push_back(dens());
    const std::int64_t l = eps_exp - (static_cast<std::int64_t>(k) + 1);
    const AQ q = o.add(o.approx_div(ncache[k], dcache[k], l),
                       o.shiftl(aq_one(o), l));
    if (o.compare(o.abs(q), o.shiftl(aq_one(o), eps_exp - 1)) <= 0)
      return static_cast<unsigned>(k);
  }
}

}  // namespace detail

// Number of terms needed for a partial sum with total error 2^eps_exp.
template <class AQ>
unsigned find_terms(const AqOps<AQ>& o, const DualStream<AQ>& s,
                    std::int64_t eps_exp) {
  StreamGen<AQ> nums = s.numerators();
  StreamGen<AQ> dens = s.denominators();
  std::vector<AQ> ncache, dcache;
  return detail::find_terms_cached(o, nums, dens, eps_exp, ncache, dcache);
}

// The sum as a real. Each query at eps picks e with 2^e <= eps, finds the
// term count k for 2^e, and adds k approximate quotients at grade l - 1
// (one bit finer than the schedule, which leaves room to re-grid the
// accumulator every 32 additions without touching the eps/2 division
// budget):
//   tail <= 2^(e-1), divisions <= k * 2^(l-1) <= 2^(e-2), re-grids
//   <= (k/32) * 2^(l-1), in total below 2^e <= eps.
template <class AQ>
Real<AQ> alternating_sum(const AqOps<AQ>& o, DualStream<AQ> s) {
  return Real<AQ>(o, [&o, s = std::move(s)](const PosRational& eps) {
    const std::int64_t e = eps.floor_log2();
    StreamGen<AQ> nums = s.numerators();
    StreamGen<AQ> dens = s.denominators();
    std::vector<AQ> ncache, dcache;
    const unsigned k =
        detail::find_terms_cached(o, nums, dens, e, ncache, dcache);
    const std::int64_t l = e - (static_cast<std::int64_t>(k) + 1) - 1;
    AQ acc = aq_zero(o);
    for (unsigned i = 0; i < k; ++i) {
      const AQ t = o.approx_div(ncache[i], dcache[i], l);
      acc = i % 2 == 0 ? o.add(acc, t) : aq_sub(o, acc, t);
      if (i % 32 == 31) acc = o.approx(acc, l);
    }
    return acc;
  });
}

}  // namespace exactreal
