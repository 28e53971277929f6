#include "hampack/rng.hpp"

namespace hampack {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t Rng::threshold_for(const Rational& p) {
  if (p.sign() <= 0) return 0;
  if (p >= 1) return ~std::uint64_t{0};
  BigInt scaled = boost::multiprecision::numerator(p) * (BigInt(1) << 64) /
                  boost::multiprecision::denominator(p);
  return scaled.convert_to<std::uint64_t>();
}

bool Rng::bernoulli(const Rational& p) {
  return bernoulli_threshold(threshold_for(p), p >= 1);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hampack
