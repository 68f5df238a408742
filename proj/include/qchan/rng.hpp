#pragma once

#include <cstdint>

namespace qchan::rng {

// Counter-based uniform stream built on the splitmix64 finalizer.  Sample n of
// stream `seed` is a pure function of (seed, n), so parallel and serial
// consumers see identical values regardless of scheduling.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t hash_at(std::uint64_t seed, std::uint64_t n) {
  std::uint64_t z = seed + (n + 1) * kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) at position n of stream `seed`.
inline double u01_at(std::uint64_t seed, std::uint64_t n) {
  return static_cast<double>(hash_at(seed, n) >> 11) * 0x1.0p-53;
}

/// Derives an independent child stream (per sweep point, per worker, ...).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
  return hash_at(seed ^ 0x5bf0f3b6a9ae4cb1ull, index);
}

}  // namespace qchan::rng
