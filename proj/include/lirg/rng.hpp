#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace lirg {

/// Deterministic random source used everywhere a seed is accepted.
///
/// The stream is std::mt19937_64 seeded directly with the 64-bit seed; its
/// output sequence is fixed by the C++ standard. Bounded draws use rejection
/// on the raw 64-bit output (values below 2^64 mod bound are discarded), so
/// results do not depend on the standard library's distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// Fisher-Yates, walking from the last position down.
  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lirg
