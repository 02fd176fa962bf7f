#pragma once

#include <cstdint>
#include <random>

namespace kantichain {

/// Seeded uniform doubles on [0,1), built from the top 53 bits of mt19937_64
/// so the stream is identical across standard libraries.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : engine_(seed) {}

  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kantichain
