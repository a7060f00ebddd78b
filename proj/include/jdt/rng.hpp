#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace jdt {

// Identifies one reproducible random stream. Two specs with equal fields give
// the same sequence of draws on every run and under every thread schedule.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend constexpr bool operator==(const RngSpec&, const RngSpec&) = default;
};

// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seed for a stream: mix64(mix64(master) ^ mix64(stream + c)). For a fixed
// master seed the map stream -> seed is a bijection, so distinct streams of
// one experiment never share a seed.
constexpr std::uint64_t stream_seed(RngSpec spec) {
  return mix64(mix64(spec.master_seed) ^
               mix64(spec.stream_index + 0x6A09E667F3BCC909ULL));
}

// Streams are namespaced by a small experiment id in the top 24 bits.
constexpr std::uint64_t namespaced_stream(std::uint32_t experiment_id,
                                          std::uint64_t index) {
  return (static_cast<std::uint64_t>(experiment_id) << 40) |
         (index & ((std::uint64_t{1} << 40) - 1));
}

// Generator owned by one stream. mt19937_64 output is fully specified by the
// standard; the bounded and real draws below avoid the implementation-defined
// std distributions so results match across standard libraries.
class Rng {
 public:
  explicit Rng(RngSpec spec) : engine_(stream_seed(spec)) {}
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection of the biased low zone.
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform integer in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jdt
