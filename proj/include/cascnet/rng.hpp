#pragma once

#include <cstdint>
#include <random>

namespace cascnet {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random source. Wraps std::mt19937_64 (bit-exact across
// platforms) and generates doubles canonically, so that seeded runs and
// golden files are reproducible everywhere. All randomized operations in
// the library derive independent child streams via stream(); two streams
// with distinct indices never share state.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(splitmix64(seed)) {}

  static Rng stream(uint64_t master, uint64_t index) {
    return Rng(splitmix64(master) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 1));
  }

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n), n >= 1, by rejection (unbiased).
  uint64_t uniform_below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cascnet
