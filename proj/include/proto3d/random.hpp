#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>

namespace proto3d {

/// Mixes a base seed with stream identifiers (splitmix64 finalizer).
inline uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> stream) {
  uint64_t h = seed ^ 0x9E3779B97F4A7C15ull;
  auto mix = [](uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  h = mix(h);
  for (uint64_t s : stream) h = mix(h + 0x9E3779B97F4A7C15ull + s);
  return h;
}

/// Explicit RNG state. Distribution mappings are fixed here rather than taken
/// from <random> so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  uint64_t index(uint64_t n) { return static_cast<uint64_t>(uniform() * static_cast<double>(n)) % n; }
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }
  /// -1 or +1 with equal probability.
  double sign() { return (engine_() >> 63) ? 1.0 : -1.0; }

  std::string state() const {
    std::ostringstream out;
    out << engine_;
    return out.str();
  }
  void set_state(const std::string& s) {
    std::istringstream in(s);
    in >> engine_;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace proto3d
