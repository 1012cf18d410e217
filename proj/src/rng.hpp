// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace cranopt {

// Deterministic random stream. The engine is the standard-mandated mt19937_64,
// and the uniform/normal transforms are written out here because the
// <random> distribution classes are free to differ across standard libraries,
// which would break the byte-identical-output contract between platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // Uniform on [0, 1) with 53 random mantissa bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller, one draw per call (the sine branch is
  // discarded to keep the stream position a simple function of call count).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) {
    // Rejection against the largest multiple of n to stay unbiased.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return x % n;
  }

  uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cranopt
