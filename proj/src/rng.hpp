#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "error.hpp"

namespace hdmi {

// Deterministic random source. The engine is mt19937_64 (bit-exact by the
// standard); all distributions are hand-rolled here so that recorded outputs
// stay stable across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent substream derived from (seed, stream). Substreams with
  // different ids never share engine state.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(mix(seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; one value per call.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Uniform integer in [0, n), rejection sampled (no modulo bias).
  int uniform_int(int n) {
    require(n > 0, Status::InvalidArgument, "uniform_int: n must be positive");
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

  // Uniform random permutation of 0..n-1 (Fisher-Yates).
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      int j = uniform_int(i + 1);
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  // SplitMix64 finalizer, used only to decorrelate stream seeds.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace hdmi
