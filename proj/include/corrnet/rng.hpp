#pragma once

#include <cstdint>
#include <random>

namespace corrnet {

// splitmix64, used to derive independent sub-stream seeds from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

// Deterministic per-stream RNG: same (seed, stream) pair always yields the
// same sequence regardless of how many other streams were consumed.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1)));
}

}  // namespace corrnet
