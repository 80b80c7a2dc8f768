#pragma once

#include <cstdint>

namespace surfphase {

// SplitMix64 (Steele/Lea/Flood, "Fast splittable pseudorandom number
// generators", 2014). Used for every random draw in the library so that
// outputs are fixed by the algorithm rather than by the standard library
// build. std::mt19937 would be reproducible too, but its distribution
// adapters are not specified bit-for-bit.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Element k of the SplitMix64 stream seeded with `seed`. Random-access form
// of the sequential generator: state_k = seed + k * gamma.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(seed + k * 0x9e3779b97f4a7c15ULL);
}

// Uniform double in [0, 1) from the top 53 bits of a random word.
inline double uniform01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Uniform double in [0, 1): element k of the stream for `seed`.
inline double uniform01_at(std::uint64_t seed, std::uint64_t k) {
  return uniform01(splitmix64_at(seed, k));
}

}  // namespace surfphase
