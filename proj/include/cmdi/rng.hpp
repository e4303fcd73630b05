#pragma once

#include <cstdint>

namespace cmdi {

// Deterministic splitmix64 stream; identical output on every platform,
// unlike the standard-library distributions.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound)
  std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

  // +1 or -1 with equal probability
  double spin() { return (next() & 1) ? 1.0 : -1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace cmdi
