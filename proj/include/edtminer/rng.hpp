#pragma once

#include <cstdint>
#include <vector>

namespace edtminer {

/// Deterministic 64-bit generator (splitmix64). Unlike the standard
/// library distributions, every draw here produces identical results on
/// every platform, which the seeded split and generator contracts rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for a (seed, index) pair; instance i of a
  /// generator run draws from stream(seed, i).
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed + 0x9E3779B97F4A7C15ull * (index + 1));
    mix.next_u64();
    return Rng(mix.next_u64());
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, n) via rejection.
  std::uint64_t bounded(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t draw = next_u64();
    while (draw > limit) draw = next_u64();
    return draw % n;
  }

  /// Inclusive integer range.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return (next_u64() & 1) != 0; }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by Rng, deterministic per seed.
template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.bounded(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace edtminer
