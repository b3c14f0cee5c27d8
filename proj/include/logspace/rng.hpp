#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace logspace {

// All randomness in the experiment harness flows from one 64-bit seed.
// Substreams are derived by hashing a stream label into the seed, so every
// check sees the same draws regardless of which other checks ran before it.
//
// The generator is splitmix64; outputs are identical on every platform,
// which keeps reports byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1): 53 mantissa bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; avoids implementation-defined
  // std::normal_distribution so streams stay portable.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derives the substream seed for a named check. Mixing through splitmix
// decorrelates adjacent labels.
inline std::uint64_t substream_seed(std::uint64_t root_seed, std::string_view label) {
  Rng mixer(root_seed ^ fnv1a(label));
  return mixer.next_u64();
}

inline Rng substream(std::uint64_t root_seed, std::string_view label) {
  return Rng(substream_seed(root_seed, label));
}

}  // namespace logspace
