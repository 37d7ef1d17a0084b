#ifndef SRL_RNG_HPP_
#define SRL_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <string_view>

namespace srl {

// Deterministic counter-based stream built on splitmix64. Unlike the
// standard-library engines and distributions, every draw is bit-identical
// across platforms and compilers, which the reproducibility contract needs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 1 | b >> 63);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static uint64_t hash_text(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  // Derives an independent stream for a named purpose.
  static Rng stream(uint64_t seed, std::string_view purpose, uint64_t a = 0,
                    uint64_t b = 0, uint64_t c = 0) {
    uint64_t s = mix(seed, hash_text(purpose));
    s = mix(s, a);
    s = mix(s, b);
    s = mix(s, c);
    return Rng(s);
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Multiply-shift; bias is negligible for n << 2^64.
  uint64_t uniform(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace srl

#endif  // SRL_RNG_HPP_
