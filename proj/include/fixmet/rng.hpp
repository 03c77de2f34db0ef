#pragma once

#include <cstdint>
#include <random>

#include "fixmet/rational.hpp"

namespace fixmet::rng {

/// Unbiased uniform draw from [0, n). mt19937_64 output is pinned by the
/// standard and the reduction below is rejection sampling, so results are
/// identical on every platform for a given seed.
inline std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t bucket = std::numeric_limits<std::uint64_t>::max() / n;
  const std::uint64_t cutoff = bucket * n;
  for (;;) {
    std::uint64_t r = engine();
    if (r < cutoff) return r / bucket;
  }
}

/// Uniform rational on the denominator-100 grid inside [lo, hi].
/// Requires the interval to contain at least one grid value.
inline Rational uniform_grid_rational(std::mt19937_64& engine, const Rational& lo,
                                      const Rational& hi) {
  const std::int64_t k_lo = (lo * Rational(100)).ceil();
  const std::int64_t k_hi = (hi * Rational(100)).floor();
  if (k_lo > k_hi) {
    throw std::invalid_argument("weight range contains no denominator-100 grid value");
  }
  const auto span = static_cast<std::uint64_t>(k_hi - k_lo + 1);
  return Rational(k_lo + static_cast<std::int64_t>(uniform_below(engine, span)), 100);
}

}  // namespace fixmet::rng
