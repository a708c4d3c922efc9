#pragma once

#include <cstdint>

namespace nci {

/// Counter-based pseudo-random generator ("sm64ctr/1").
///
/// Output i is a SplitMix64-style bit mix of key + i * golden gamma, so a
/// generator is a pure function of (seed, stream, counter). Replications can
/// each take their own stream and produce identical values no matter which
/// thread runs them or in what order.
class CounterRng {
 public:
  static constexpr const char* kName = "sm64ctr/1";

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(derive_key(seed, stream)) {}

  /// Independent generator for a sub-stream of this one.
  CounterRng split(std::uint64_t stream) const {
    CounterRng child(0, 0);
    child.key_ = mix(key_ ^ mix(stream + 0x9E3779B97F4A7C15ULL));
    child.counter_ = 0;
    return child;
  }

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix(key_ + counter_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_unit() < p; }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
    return mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^
               mix(stream * 0xD1B54A32D192ED03ULL + 0x8BB84B93962EACC9ULL));
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace nci
