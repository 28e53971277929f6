#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hampack/rational.hpp"

namespace hampack {

/// Seeded generator used by every randomised routine. The engine is
/// std::mt19937_64, whose output sequence is fixed by the C++ standard; the
/// derived draws below avoid <random> distributions (implementation-defined)
/// so results replicate bit-exactly across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p (p clamped to [0, 1]); p = 1 always succeeds.
  bool bernoulli(const Rational& p);
  /// Same draw with a precomputed 64-bit threshold (see threshold_for).
  bool bernoulli_threshold(std::uint64_t threshold, bool always) {
    return always || next() < threshold;
  }
  static std::uint64_t threshold_for(const Rational& p);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 mixing of (seed, stream); used to derive independent per-row
/// and per-attempt seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hampack
