#pragma once

#include <cstdint>
#include <vector>

#include "nscloner/rational.hpp"
#include "nscloner/report.hpp"

namespace nscloner {

/// Scale and tolerances of the verification sweep. The defaults are the
/// desk-scale configuration: all spins up to 2j = 10, 50 geometries and 100
/// Bloch samples per check.
struct VerifyConfig {
  int max_two_j = 10;
  std::vector<Rational> t_grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                               Rational(1)};
  int geometries = 50;
  int bloch_samples = 100;
  std::uint64_t seed = 20250808;
  /// Tolerance of the geometry-sweep residual checks; exact-arithmetic
  /// identities always require exactly zero.
  double tol = 1e-10;
  /// Fault injection: when nonzero, the coefficient vectors entering the
  /// float-path parity and eigen checks are shifted by this amount at
  /// m = +j, which must make those checks fail by about the same amount.
  double perturb = 0.0;
};

/// Runs the full invariant suite and returns the per-check records with a
/// finalized summary. With perturb == 0 every record passes.
VerificationReport run_verification(const VerifyConfig& config);

}  // namespace nscloner
