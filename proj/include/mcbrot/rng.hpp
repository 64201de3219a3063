#pragma once

#include <cstdint>

namespace mcbrot {

// splitmix64 generator. The stream is identical on every platform and
// compiler; seeded test vectors and per-task parallel streams depend on that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

// Derives an independent stream for task `index` from a base seed, so work
// fanned out across workers draws the same numbers regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  Rng r(base ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return r.next_u64();
}

}  // namespace mcbrot
