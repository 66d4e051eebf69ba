#pragma once

#include <cstdint>
#include <random>

namespace fracstab {

// splitmix64 finalizer; derives per-experiment seeds from (seed, index)
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// uniform draw in [-1, 1); bit-reproducible across standard libraries
inline double symmetric_draw(std::mt19937_64& eng) {
  return 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace fracstab
