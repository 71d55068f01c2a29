#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace autohint {

/// Deterministic RNG used everywhere randomness is seeded. Wraps
/// std::mt19937_64 (bit-exact across platforms) and avoids the standard
/// distributions, whose outputs are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased draw in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n);

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  /// k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<std::size_t> choose_k(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

/// Stable sub-seed derivation: mixes a master seed with a textual tag so
/// independent pipeline stages never share a stream.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag);

/// FNV-1a 64-bit hash (deterministic across platforms, unlike std::hash).
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace autohint
