#pragma once

#include <cstdint>
#include <random>

namespace gp {

/// Seeded random source for the property suites. mt19937_64 output is fully
/// specified by the standard; the bounded draw below avoids
/// std::uniform_int_distribution, whose mapping is implementation-defined.
/// Identical seeds therefore give identical samples on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Unbiased draw from [0, n) via rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Inclusive range.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gp
