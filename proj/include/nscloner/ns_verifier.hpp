#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "nscloner/channel.hpp"
#include "nscloner/cloner_family.hpp"

namespace nscloner {

/// Raised when an eigenvalue count is ill-posed because other spectrum sits
/// too close to the target eigenvalue. The answer is inconclusive, not wrong.
class SpectralGapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometry of the two-state mixture used by the no-signaling constraint:
/// one state at polar angle theta (azimuth 0), the other at theta_prime
/// (azimuth pi), mixed so the total Bloch vector points along +z.
struct MixtureGeometry {
  double theta = 0.0;
  double theta_prime = 0.0;
  /// Weight of the first state in the tilted decomposition:
  /// sin(theta') / (sin(theta) + sin(theta')).
  double mixing_weight = 0.0;
  /// Weight of |z> in the antipodal decomposition of the same mixture:
  /// (1 + sin(theta + theta') / (sin(theta) + sin(theta'))) / 2.
  double z_weight = 0.0;
  /// Unnormalized antipodal coefficients,
  /// 2 c_pm = sin(theta) + sin(theta') +- sin(theta + theta').
  double c_plus = 0.0;
  double c_minus = 0.0;

  double target_eigenvalue() const { return std::sin(theta + theta_prime); }
};

/// Throws std::domain_error when the angles leave (0, pi) or the pair is
/// degenerate (sin(theta) + sin(theta') below 1e-12).
MixtureGeometry mixture_geometry(double theta, double theta_prime);

/// The no-signaling constraint matrix: entry (m, m') is
/// |d_{mm'}(theta)|^2 sin(theta') + |d_{mm'}(theta')|^2 sin(theta)
/// - 2 c_minus / (2j+1). Every row sums to sin(theta + theta'), so the
/// uniform vector is always an eigenvector at the target eigenvalue.
struct NsMatrix {
  TwiceJ j;
  MixtureGeometry geometry;
  Eigen::MatrixXd entries;
};

NsMatrix ns_matrix(TwiceJ j, const MixtureGeometry& geometry);

/// || A p - sin(theta + theta') p ||_inf for the assembled constraint
/// matrix. Family members land below ~1e-12 at moderate j.
double eigen_residual(const ProbDist& p, const MixtureGeometry& geometry);

/// Number of eigenvalues of the constraint matrix within gap_tol of the
/// target sin(theta + theta'). Expected 2 for generic geometry. Throws
/// SpectralGapError when excluded spectrum sits within 10*gap_tol of the
/// target, which would make the count depend on the tolerance.
int solution_space_dim(TwiceJ j, const MixtureGeometry& geometry, double gap_tol);

/// Distance from the target eigenvalue to the nearest eigenvalue outside
/// the gap_tol window. The sweep driver rejects geometries where this gap
/// is too small for the degeneracy count to be well-posed.
double target_spectral_gap(TwiceJ j, const MixtureGeometry& geometry, double gap_tol);

/// Largest norm loss when projecting the two nonnegative basis solutions
/// (j +- m)/(j(2j+1)) onto the numerically computed target eigenspace.
double eigenspace_span_loss(TwiceJ j, const MixtureGeometry& geometry, double gap_tol);

/// max_m | sum_m' |d_{mm'}(theta)|^2 (a m' + b) - (a m cos(theta) + b) |,
/// the rotation identity for linear functions of m.
double linear_identity_check(TwiceJ j, double theta, double a, double b);

/// max_m | p_{jm} + p_{j,-m} - 2/(2j+1) |.
double parity_check(const ProbDist& p);
/// Same in exact arithmetic; family members give exactly zero.
Rational parity_check_exact(const ExactProbDist& p);

/// Frobenius distance between the two matrix forms of the no-signaling
/// constraint: sum_m (c+ p_m + c- p_{-m}) |z; jm><z; jm| versus
/// sum_m p_m (sin(theta') |n; jm><n; jm| + sin(theta) |n'; jm><n'; jm|).
double convex_equality_check(const ClonerSpec& spec, const MixtureGeometry& geometry);

}  // namespace nscloner
