#pragma once

#include <cstdint>
#include <random>

namespace geoinv {

/// Seeded generator for the verification harness: std::mt19937_64 with
/// fixed bit-to-double mappings, so identical seeds replay identical draws
/// on every platform (the std distributions do not guarantee that).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  double uniform01() {  // [0, 1), 53-bit
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double gaussian();  // standard normal, Box-Muller

 private:
  std::mt19937_64 eng_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// splitmix64 mix of a base seed and a stream id; decorrelates per-trial and
/// per-class streams drawn from one user seed.
uint64_t mix_seed(uint64_t seed, uint64_t stream);

}  // namespace geoinv
