#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nscloner {

/// Pure qubit state as a point on the Bloch sphere, polar angle theta in
/// [0, pi] and azimuth phi normalized into [0, 2*pi).
///
/// Qubit basis convention: |0> is spin-up (+z), |1> is spin-down, matching
/// the descending-m ordering used for all spin-j objects in this library.
struct BlochVector {
  double theta = 0.0;
  double phi = 0.0;

  BlochVector() = default;
  BlochVector(double theta_, double phi_) : theta(theta_), phi(wrap_phi(phi_)) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
      throw std::domain_error("BlochVector: theta must lie in [0, pi]");
  }

  std::array<double, 3> unit3() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  /// The antipodal point: (pi - theta, phi + pi).
  BlochVector antipode() const { return BlochVector(std::numbers::pi - theta, phi + std::numbers::pi); }

  /// State vector R(phi, theta)|0>, i.e. (cos(theta/2) e^{-i phi/2},
  /// sin(theta/2) e^{+i phi/2}). The phase follows the z-y-z Euler rotation
  /// R(phi, theta, 0) used for every rotated object in the library.
  Eigen::Vector2cd ket() const {
    const std::complex<double> half_phase(std::cos(0.5 * phi), std::sin(0.5 * phi));
    return {std::cos(0.5 * theta) / half_phase, std::sin(0.5 * theta) * half_phase};
  }

  /// Orthogonal companion R(phi, theta)|1>. Equals ket() of the antipode up
  /// to a global phase.
  Eigen::Vector2cd ket_down() const {
    const std::complex<double> half_phase(std::cos(0.5 * phi), std::sin(0.5 * phi));
    return {-std::sin(0.5 * theta) / half_phase, std::cos(0.5 * theta) * half_phase};
  }

  Eigen::Matrix2cd projector() const {
    const Eigen::Vector2cd v = ket();
    return v * v.adjoint();
  }

 private:
  static double wrap_phi(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phi, two_pi);
    if (w < 0.0) w += two_pi;
    return w;
  }
};

}  // namespace nscloner
