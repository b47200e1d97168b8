#pragma once

#include <cstdint>

namespace entrobound {

// Counter-based splittable generator. Output word k of the stream with a given
// seed is mix(seed + (k+1) * 0x9E3779B97F4A7C15) where mix is the bijective
// 64-bit finalizer
//
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27;  z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
//
// Jumping to any position is O(1), and substream(seed, i) opens an independent
// stream keyed by (seed, i), so per-trial results do not depend on how many
// draws earlier trials consumed. Doubles take the top 53 bits, uniform on [0,1).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  static CounterRng substream(std::uint64_t seed, std::uint64_t index) {
    return CounterRng(mix(seed + mix(index + 0x9E3779B97F4A7C15ULL)));
  }

  std::uint64_t next_u64() {
    ++counter_;
    return mix(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform on [0,1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log argument.
  double next_double_open() { return 1.0 - next_double(); }

  double next_exponential();
  double next_gaussian();

  // Uniform integer in [lo, hi] inclusive (modulo bias is irrelevant here:
  // ranges are tiny against 2^64).
  std::uint64_t next_index(std::uint64_t lo, std::uint64_t hi) {
    return lo + next_u64() % (hi - lo + 1);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace entrobound
