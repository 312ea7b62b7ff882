#ifndef FATLAB_RNG_HPP
#define FATLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace fatlab {

// splitmix64 finalizer; full avalanche, so nearby inputs give unrelated
// outputs.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seed for subtask i of a run seeded with `seed`. Stable across
/// platforms, so trial i sees the same stream no matter how trials are
/// scheduled over threads.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  return mix64(seed ^ mix64(i + 0x632be59bd9b4e019ull));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform draw from {0, .., n-1} by rejection. mt19937_64 output and
/// this reduction are both fully specified, unlike
/// std::uniform_int_distribution whose mapping is implementation defined.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n == 0");
  // 2^64 mod n; draws below this would bias the low residues
  std::uint64_t threshold = (-n) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace fatlab

#endif
