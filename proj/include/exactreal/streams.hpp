#pragma once

#include <functional>
#include <utility>

#include "exactreal/aq_ops.hpp"

namespace exactreal {

// A lazy infinite sequence is consumed through a stateful generator; calling
// it yields the next element. Factories produce a fresh generator per
// consumer, so every evaluation walks its own cursor and nothing is shared
// across calls.
template <class AQ>
using StreamGen = std::function<AQ()>;

template <class AQ>
using StreamFactory = std::function<StreamGen<AQ>()>;

// Term-wise quotients n_i / d_i, the series terms with division postponed.
template <class AQ>
struct DualStream {
  StreamFactory<AQ> numerators;
  StreamFactory<AQ> denominators;
};

// 1, a, a^2, a^3, ... by accumulated multiplication.
template <class AQ>
StreamFactory<AQ> stream_powers(const AqOps<AQ>& o, AQ a) {
  return [&o, a = std::move(a)]() -> StreamGen<AQ> {
    return [&o, a, cur = aq_one(o)]() mutable {
      AQ out = cur;
      cur = o.mul(cur, a);
      return out;
    };
  };
}

// a, a^3, a^5, ... (steps of a^2).
template <class AQ>
StreamFactory<AQ> stream_odd_powers(const AqOps<AQ>& o, AQ a) {
  return [&o, a = std::move(a)]() -> StreamGen<AQ> {
    return [&o, sq = o.mul(a, a), cur = a]() mutable {
      AQ out = cur;
      cur = o.mul(cur, sq);
      return out;
    };
  };
}

// 0!, 1!, 2!, ...
template <class AQ>
StreamFactory<AQ> stream_factorials(const AqOps<AQ>& o) {
  return [&o]() -> StreamGen<AQ> {
    return [&o, acc = aq_one(o), i = BigInt(0)]() mutable {
      AQ out = acc;
      ++i;
      acc = o.mul(acc, o.inject_int(i));
      return out;
    };
  };
}

// 1, 3, 5, 7, ...
template <class AQ>
StreamFactory<AQ> stream_odds(const AqOps<AQ>& o) {
  return [&o]() -> StreamGen<AQ> {
    return [&o, i = BigInt(1)]() mutable {
      AQ out = o.inject_int(i);
      i += 2;
      return out;
    };
  };
}

// Element-wise product.
template <class AQ>
StreamFactory<AQ> stream_zip_mul(const AqOps<AQ>& o, StreamFactory<AQ> f,
                                 StreamFactory<AQ> g) {
  return [&o, f = std::move(f), g = std::move(g)]() -> StreamGen<AQ> {
    return [&o, gf = f(), gg = g()]() mutable { return o.mul(gf(), gg()); };
  };
}

// Elements start, start + 2, start + 4, ... of the underlying stream.
template <class AQ>
StreamFactory<AQ> stream_every_other(StreamFactory<AQ> f, unsigned start) {
  return [f = std::move(f), start]() -> StreamGen<AQ> {
    return [g = f(), skip = start, first = true]() mutable {
      if (first) {
        first = false;
        for (unsigned i = 0; i < skip; ++i) g();
      } else {
        g();
      }
      return g();
    };
  };
}

// c * x for every element x.
template <class AQ>
StreamFactory<AQ> stream_scale(const AqOps<AQ>& o, AQ c, StreamFactory<AQ> f) {
  return [&o, c = std::move(c), f = std::move(f)]() -> StreamGen<AQ> {
    return [&o, c, g = f()]() mutable { return o.mul(c, g()); };
  };
}

template <class AQ>
StreamFactory<AQ> stream_const(const AqOps<AQ>& o, AQ c) {
  return [&o, c = std::move(c)]() -> StreamGen<AQ> {
    return [c]() { return c; };
  };
}

}  // namespace exactreal
