#pragma once

#include <cstdint>
#include <random>

namespace vmemb {

/// Uniform integer in [0, bound) drawn from mt19937_64 by rejection.
/// Unlike std::uniform_int_distribution this is bit-stable across
/// platforms and standard library implementations.
inline std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t residue = (~std::uint64_t{0} % bound + 1) % bound;
  const std::uint64_t limit = ~std::uint64_t{0} - residue;
  std::uint64_t r = rng();
  while (r > limit) r = rng();
  return r % bound;
}

/// Uniform integer in [lo, hi], inclusive.
inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(uniform_u64(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace vmemb
