#pragma once

#include <cstdint>
#include <random>

#include "kscheck/rational.hpp"

namespace kscheck {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used both to seed engines and to derive independent
// sub-seeds: sub_seed(master, k) feeds master + (k+1)*golden through the mixer.
// This is the documented seed-splitting rule for trials and sweep entries.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + stream * 0x9E3779B97F4A7C15ULL);
}

// Uniform in [0, 1). Hand-rolled so results do not depend on the standard
// library's distribution implementations.
inline double uniform_double01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [0, bound). Rejection sampling, bias-free.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

// Uniform integer in [lo, hi], inclusive.
inline std::int64_t uniform_int_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_below(rng, span));
}

// Small random rational, suitable as a circle tangent: p/q with
// |p| <= max_abs, 1 <= q <= max_abs.
inline Rational random_tangent(Rng& rng, int max_abs = 40) {
  Int p(uniform_int_in(rng, -max_abs, max_abs));
  Int q(uniform_int_in(rng, 1, max_abs));
  return make_rational(std::move(p), std::move(q));
}

}  // namespace kscheck
