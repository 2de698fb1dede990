#pragma once

#include <cstdint>
#include <vector>

namespace sparsekit {

// splitmix64-v1: counter-based 64-bit generator. Output i (i = 1, 2, ...) is
// mix(seed + i * 0x9E3779B97F4A7C15) with the splitmix64 finalizer. All random
// choices in the toolkit go through below()/chance() so that corpora can be
// reproduced bit-for-bit by other implementations.
class CounterRng {
 public:
  static constexpr const char* kName = "splitmix64-v1";

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() {
    ++counter_;
    std::uint64_t z = seed_ + counter_ * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0, by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // Bernoulli with probability p, resolved to a 1/2^20 grid so that the
  // outcome does not depend on floating-point rounding.
  bool bernoulli(double p) {
    const auto scaled = static_cast<std::uint64_t>(p * (1u << 20) + 0.5);
    return below(1u << 20) < scaled;
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace sparsekit
