#pragma once

#include <cstdint>
#include <cmath>
#include <random>
#include <vector>

namespace gcol {

// Repo-wide random source: std::mt19937_64 (bit-exact engine per the C++
// standard) with hand-rolled draw helpers, because the standard library's
// distribution objects are not portable across implementations. Changing
// the engine or any helper changes every seeded result in the project.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // [0,1) with 53 random bits
  double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // [0,bound), unbiased via rejection
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // inclusive range
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Box-Muller; draws two uniforms per call, no state carried over
  double normal(double mean, double stddev) {
    double u1 = next_unit(), u2 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    return mean + stddev * z;
  }

  bool bernoulli(double p) { return next_unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 step; used to derive independent seed streams
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gcol
