// Seeded random streams.
//
// All randomness flows through one 64-bit run seed.  Independent streams
// are derived by hashing (seed, stream id) through SplitMix64, so results
// do not depend on evaluation order.  Uniform doubles are produced from
// the top 53 bits, which pins the byte-level output across platforms.

#pragma once

#include <cstdint>

namespace specwalk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // SplitMix64 step.
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    return next_u64() % n;
  }

  // Derives an independent stream from this seed and a stream id.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ull * (stream_id + 1)));
    mix.next_u64();
    return Rng(mix.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace specwalk
