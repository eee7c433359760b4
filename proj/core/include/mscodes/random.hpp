#pragma once

#include <cstdint>
#include <random>

namespace mscodes {

/// Every randomized routine draws from a std::mt19937_64 seeded directly
/// with the 64-bit seed. The variate helpers below are spelled out instead of
/// using <random> distributions, whose algorithms are implementation-defined,
/// so traces replay identically across standard libraries and languages.
using Engine = std::mt19937_64;

struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

inline Engine make_engine(RngSeed seed) { return Engine(seed.value); }

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for trial `index` of an experiment: splitmix64(master ^ splitmix64(index)).
constexpr RngSeed derive_seed(RngSeed master, std::uint64_t index) noexcept {
  return RngSeed{splitmix64(master.value ^ splitmix64(index))};
}

/// Uniform integer in [0, bound) by rejection of the biased low range.
/// `bound` must be nonzero.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform_unit(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Engine& engine, double p) { return uniform_unit(engine) < p; }

/// Poisson variate by Knuth's product method; means above 30 are split into
/// independent chunks of at most 30.
std::uint64_t poisson(Engine& engine, double mean);

}  // namespace mscodes
