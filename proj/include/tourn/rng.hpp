#pragma once

#include <cstdint>

namespace tourn {

/// xorshift64* generator seeded through one SplitMix64 step.
///
/// Seeding: state = splitmix64(seed), where
///   z  = seed + 0x9E3779B97F4A7C15
///   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   state = z ^ (z >> 31)
/// and a zero state is replaced by 0x9E3779B97F4A7C15.
///
/// Step: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x * 0x2545F4914F6CDD1D.
///
/// All arithmetic is on unsigned 64-bit integers modulo 2^64, so sequences are
/// identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Most significant bit of the next output.
  bool next_bit() { return (next() >> 63) != 0; }

  /// Uniform-ish value in [0, bound) by multiply-shift on the top 32 bits.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(((next() >> 32) * bound) >> 32);
  }

 private:
  std::uint64_t state_;
};

}  // namespace tourn
