#pragma once

#include <cstdint>

namespace skewtensor {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the index-th child of a recursion branch; depends only on the
// parent seed and the index, so results do not depend on scheduling.
inline std::uint64_t split_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(parent ^ splitmix64(index + 1));
}

}  // namespace skewtensor
