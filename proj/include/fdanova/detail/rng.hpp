#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fdanova::detail {

// SplitMix64 step; used only to derive well-separated substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives a substream seed from a master seed and up to three indices.
/// Distinct index tuples give statistically independent streams, so
/// replications may run in any order or thread without changing results.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t a,
                               std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = seed;
  std::uint64_t out = splitmix64(s);
  s = out ^ (a * 0x9e3779b97f4a7c15ULL + 0x3c6ef372fe94f82aULL);
  out = splitmix64(s);
  s = out ^ (b * 0xbf58476d1ce4e5b9ULL + 0x7f4a7c159e3779b9ULL);
  out = splitmix64(s);
  s = out ^ (c * 0x94d049bb133111ebULL + 0x1ce4e5b9bf58476dULL);
  return splitmix64(s);
}

/// Deterministic random stream: mt19937_64 core (bit-identical across
/// platforms by the standard) with hand-rolled distributions so draw
/// sequences never depend on the standard library vendor.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Fair coin from the top bit.
  bool flip() { return (gen_() >> 63) != 0; }

  /// Standard normal via Marsaglia polar method (caches the spare).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  /// Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0ULL - n) % n;
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  /// Fisher-Yates shuffle.
  template <typename Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fdanova::detail
