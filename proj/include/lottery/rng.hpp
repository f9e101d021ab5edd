#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lottery {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a, stable across platforms (unlike std::hash).
constexpr std::uint64_t label_hash(std::string_view label) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Derives an independent sub-seed from (seed, label, index). Every random
/// stream in the toolkit is keyed this way so results do not depend on the
/// order in which work items are scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                                    std::uint64_t index = 0) noexcept {
  return mix64(mix64(seed ^ label_hash(label)) + mix64(index));
}

inline Rng make_rng(std::uint64_t seed, std::string_view label,
                    std::uint64_t index = 0) {
  return Rng(derive_seed(seed, label, index));
}

}  // namespace lottery
