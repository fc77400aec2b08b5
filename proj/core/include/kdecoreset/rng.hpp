#pragma once

#include <cstdint>
#include <random>

namespace kdecoreset {

// Seeded random helpers on top of mt19937_64.  The standard distributions
// are implementation-defined, so bounded ints, unit doubles and normals are
// derived from raw engine output here; identical seeds give identical
// streams on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller (one value per call, second discarded).
inline double next_gaussian(std::mt19937_64& rng) {
  double u1 = next_unit(rng);
  while (u1 <= 0.0) u1 = next_unit(rng);
  const double u2 = next_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace kdecoreset
