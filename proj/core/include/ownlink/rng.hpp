#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ownlink {

// Deterministic RNG built directly on the mt19937_64 output sequence. The
// standard distribution classes are not portable across library
// implementations; these samplers are, which keeps traces byte-identical
// for a given seed regardless of toolchain.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_value_(seed) {}

  std::uint64_t u64() { return engine_(); }

  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t uniform(std::uint64_t n);

  // Uniform double in [0, 1) with 53 bits of precision.
  double real01();

  bool chance(double probability) { return real01() < probability; }

  // Knuth's product-of-uniforms sampler; mean values here stay small.
  std::uint64_t poisson(double mean);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(items.size()))];
  }

  // Sample k distinct indices from [0, n), ascending.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

  // Named child stream, independent of how much of this stream was consumed:
  // child seed = first 8 bytes of SHA-256(seed_le || label).
  SeededRng derive(std::string_view label) const;

  std::uint64_t seed() const { return seed_value_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_value_;
};

}  // namespace ownlink
