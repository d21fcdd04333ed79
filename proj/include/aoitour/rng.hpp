#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>

namespace aoitour {

// splitmix64 finalizer, used to derive independent child seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for one (m, trial) cell of a sweep. A pure function of its inputs,
// so adding trials or m values never perturbs existing cells.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t m,
                                 std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(base_seed) ^ m) ^ trial);
}

// Seeded random source with portable output. The engine (std::mt19937_64)
// and every mapping below are fully specified, so a fixed seed reproduces
// the same stream on any platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n) via rejection sampling. n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (kMax % n + 1) % n;  // 2^64 mod n
    const std::uint64_t limit = kMax - rem;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return x % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Fisher-Yates shuffle driven by below(), independent of std::shuffle's
  // unspecified draw pattern.
  template <class RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      std::swap(first[i - 1], first[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace aoitour
