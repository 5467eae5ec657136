#ifndef SIMDIM_RNG_HPP
#define SIMDIM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace simdim {

// mt19937_64 keystream is pinned by the standard, the distribution adaptors
// are not. Uniform draws therefore go through rejection sampling here so the
// same seed yields the same graphs on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n), n >= 1.
  int uniform(int n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = ~0ULL - ~0ULL % un;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return static_cast<int>(x % un);
  }

  bool chance(double p) {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[uniform(i + 1)]);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace simdim

#endif
