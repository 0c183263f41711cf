#pragma once

#include <cstdint>
#include <random>

namespace lq {

// Stateless mixer used to derive independent substreams from (seed, salt...).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt0, std::uint64_t salt1 = 0,
                       std::uint64_t salt2 = 0);

// mt19937_64 engine with portable output mapping. std::mt19937_64 itself is
// bit-exact across implementations; the distribution adapters in <random> are
// not, so uniform doubles and bounded ints are derived here directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound < 2) return 0;
    const std::uint64_t min = (~bound + 1) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x < min);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lq
