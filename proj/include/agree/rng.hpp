#pragma once

#include <cstdint>

namespace agree {

// SplitMix64. Output j (0-based) of the stream seeded with s is
// mix(s + (j + 1) * kGamma), so any position can be reached directly.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  static std::uint64_t at(std::uint64_t seed, std::uint64_t j) {
    return mix(seed + (j + 1) * kGamma);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Maps a 64-bit draw onto [0, bound) by taking the high word of x * bound.
  static std::uint64_t scale(std::uint64_t x, std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace agree
