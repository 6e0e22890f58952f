#include "ownlink/rng.hpp"

#include <algorithm>
#include <cmath>

#include "ownlink/crypto.hpp"

namespace ownlink {

std::uint64_t SeededRng::uniform(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double SeededRng::real01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t SeededRng::poisson(double mean) {
  if (mean <= 0.0) return 0;
  const double threshold = std::exp(-mean);
  std::uint64_t count = 0;
  double product = 1.0;
  for (;;) {
    product *= real01();
    if (product <= threshold) return count;
    ++count;
  }
}

std::vector<std::size_t> SeededRng::sample_indices(std::size_t n, std::size_t k) {
  std::vector<std::size_t> chosen;
  if (k == 0 || n == 0) return chosen;
  if (k > n) k = n;
  chosen.reserve(k);
  // Floyd's method: each iteration adds exactly one new index.
  for (std::size_t j = n - k; j < n; ++j) {
    std::size_t t = static_cast<std::size_t>(uniform(j + 1));
    bool seen = false;
    for (auto c : chosen) {
      if (c == t) {
        seen = true;
        break;
      }
    }
    chosen.push_back(seen ? j : t);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

SeededRng SeededRng::derive(std::string_view label) const {
  std::string material;
  material.reserve(8 + label.size());
  for (int i = 0; i < 8; ++i)
    material.push_back(static_cast<char>(seed_value_ >> (8 * i)));
  material.append(label);
  auto digest = sha256(material);
  std::uint64_t child = 0;
  for (int i = 0; i < 8; ++i)
    child |= static_cast<std::uint64_t>(digest[i]) << (8 * i);
  return SeededRng(child);
}

}  // namespace ownlink
