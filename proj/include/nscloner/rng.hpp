#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "nscloner/bloch.hpp"

namespace nscloner {

/// Deterministic uniform generator on top of mt19937_64. The raw engine
/// output is mapped to doubles by hand because the standard distributions
/// are implementation-defined and would break byte-reproducible reports.
class Rng64 {
 public:
  explicit Rng64(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Haar-uniform point on the Bloch sphere.
  BlochVector bloch() {
    const double cos_theta = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return BlochVector(std::acos(cos_theta), phi);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nscloner
