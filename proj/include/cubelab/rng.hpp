#ifndef CUBELAB_RNG_HPP
#define CUBELAB_RNG_HPP

// Deterministic, platform-independent sampling.  All randomized experiments
// derive their draws from a seeded SplitMix64 stream so that a fixed --seed
// reproduces every report byte for byte.

#include <cstdint>

namespace clab {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed = 1) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.  Plain rejection keeps the draw unbiased
  // and identical on every platform.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

}  // namespace clab

#endif
