#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace bestofn {

// Name recorded in simulation output metadata for provenance.
inline constexpr const char* kRngAlgorithm = "xoshiro256++";

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ (Blackman & Vigna). Seeded through splitmix64 so that
/// low-entropy seeds still produce well-mixed states.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  /// Stream derivation contract: partition i of a run seeded with s uses
  /// the generator seeded with splitmix64-mix of (s XOR golden*(i+1)).
  /// This is the fixed, documented (seed, partition) -> stream map; results
  /// must not depend on which worker thread executes the partition.
  static Xoshiro256pp for_partition(std::uint64_t seed, std::uint64_t partition) {
    return Xoshiro256pp(seed ^ (0x9E3779B97F4A7C15ULL * (partition + 1)));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return std::numeric_limits<std::uint64_t>::max(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// One Bernoulli(p) draw consuming exactly one 64-bit output.
  bool bernoulli(double p) { return next() < bernoulli_threshold(p); }

  /// Precomputable threshold so hot loops can compare raw 64-bit outputs.
  static std::uint64_t bernoulli_threshold(double p) {
    return static_cast<std::uint64_t>(p * 0x1.0p64);
  }

  /// Exponential(rate) via inverse CDF; consumes one output.
  double exponential(double rate) {
    return -std::log1p(-next_double()) / rate;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

}  // namespace bestofn
