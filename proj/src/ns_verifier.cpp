#include "nscloner/ns_verifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "nscloner/pseudospin.hpp"

namespace nscloner {

MixtureGeometry mixture_geometry(double theta, double theta_prime) {
  if (!(theta > 0.0 && theta < std::numbers::pi) ||
      !(theta_prime > 0.0 && theta_prime < std::numbers::pi))
    throw std::domain_error("mixture_geometry: angles must lie in (0, pi)");
  const double sin_sum = std::sin(theta) + std::sin(theta_prime);
  if (sin_sum < 1e-12) throw std::domain_error("mixture_geometry: degenerate angle pair");

  const double sin_total = std::sin(theta + theta_prime);
  MixtureGeometry geometry;
  geometry.theta = theta;
  geometry.theta_prime = theta_prime;
  geometry.mixing_weight = std::sin(theta_prime) / sin_sum;
  geometry.z_weight = 0.5 * (1.0 + sin_total / sin_sum);
  geometry.c_plus = 0.5 * (sin_sum + sin_total);
  geometry.c_minus = 0.5 * (sin_sum - sin_total);
  return geometry;
}

NsMatrix ns_matrix(TwiceJ j, const MixtureGeometry& geometry) {
  const Eigen::MatrixXd d_theta = wigner_d(j, geometry.theta);
  const Eigen::MatrixXd d_prime = wigner_d(j, geometry.theta_prime);
  const double shift = 2.0 * geometry.c_minus / j.dim();
  Eigen::MatrixXd entries =
      d_theta.cwiseAbs2() * std::sin(geometry.theta_prime) +
      d_prime.cwiseAbs2() * std::sin(geometry.theta) -
      Eigen::MatrixXd::Constant(j.dim(), j.dim(), shift);
  return NsMatrix{j, geometry, std::move(entries)};
}

double eigen_residual(const ProbDist& p, const MixtureGeometry& geometry) {
  const NsMatrix matrix = ns_matrix(p.j(), geometry);
  const Eigen::Map<const Eigen::VectorXd> vec(p.values().data(), p.size());
  return (matrix.entries * vec - geometry.target_eigenvalue() * vec).cwiseAbs().maxCoeff();
}

namespace {

// Eigenvalues of the constraint matrix. The matrix is symmetric up to the
// floating-point noise of the Wigner evaluation; fall back to a general
// eigensolver if that ever fails to hold.
Eigen::VectorXd ns_spectrum(const NsMatrix& matrix, Eigen::MatrixXd* vectors) {
  const Eigen::MatrixXd& a = matrix.entries;
  const double asymmetry = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry < 1e-12) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (a + a.transpose()));
    if (vectors) *vectors = solver.eigenvectors();
    return solver.eigenvalues();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
  if (vectors) *vectors = solver.eigenvectors().real();
  return solver.eigenvalues().real();
}

}  // namespace

int solution_space_dim(TwiceJ j, const MixtureGeometry& geometry, double gap_tol) {
  const Eigen::VectorXd spectrum = ns_spectrum(ns_matrix(j, geometry), nullptr);
  const double target = geometry.target_eigenvalue();

  int inside = 0;
  double nearest_outside = std::numeric_limits<double>::infinity();
  for (int i = 0; i < spectrum.size(); ++i) {
    const double distance = std::abs(spectrum(i) - target);
    if (distance < gap_tol)
      ++inside;
    else
      nearest_outside = std::min(nearest_outside, distance);
  }
  if (nearest_outside < 10.0 * gap_tol)
    throw SpectralGapError("solution_space_dim: spectrum within " +
                           std::to_string(nearest_outside) + " of the target eigenvalue");
  return inside;
}

double target_spectral_gap(TwiceJ j, const MixtureGeometry& geometry, double gap_tol) {
  const Eigen::VectorXd spectrum = ns_spectrum(ns_matrix(j, geometry), nullptr);
  const double target = geometry.target_eigenvalue();
  double nearest_outside = std::numeric_limits<double>::infinity();
  for (int i = 0; i < spectrum.size(); ++i) {
    const double distance = std::abs(spectrum(i) - target);
    if (distance >= gap_tol) nearest_outside = std::min(nearest_outside, distance);
  }
  return nearest_outside;
}

double eigenspace_span_loss(TwiceJ j, const MixtureGeometry& geometry, double gap_tol) {
  Eigen::MatrixXd vectors;
  const Eigen::VectorXd spectrum = ns_spectrum(ns_matrix(j, geometry), &vectors);
  const double target = geometry.target_eigenvalue();

  std::vector<int> picked;
  for (int i = 0; i < spectrum.size(); ++i)
    if (std::abs(spectrum(i) - target) < gap_tol) picked.push_back(i);
  if (picked.empty()) throw SpectralGapError("eigenspace_span_loss: empty target eigenspace");

  Eigen::MatrixXd selected(j.dim(), picked.size());
  for (std::size_t c = 0; c < picked.size(); ++c) selected.col(c) = vectors.col(picked[c]);
  // Orthonormalize; the general-eigensolver fallback does not guarantee it.
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(selected);
  const Eigen::MatrixXd basis =
      qr.householderQ() * Eigen::MatrixXd::Identity(j.dim(), static_cast<int>(picked.size()));

  // The two extremal family members t = 1 and t = 0.
  double worst = 0.0;
  for (const double t : {1.0, 0.0}) {
    Eigen::VectorXd p(j.dim());
    const ProbDist dist = prob_vector(ClonerSpec(j, t));
    for (int i = 0; i < j.dim(); ++i) p(i) = dist[i];
    p.normalize();
    const Eigen::VectorXd projected = basis * (basis.transpose() * p);
    worst = std::max(worst, (p - projected).norm());
  }
  return worst;
}

double linear_identity_check(TwiceJ j, double theta, double a, double b) {
  const Eigen::MatrixXd d = wigner_d(j, theta);
  const double cos_theta = std::cos(theta);
  double worst = 0.0;
  for (int row = 0; row < j.dim(); ++row) {
    double sum = 0.0;
    for (int col = 0; col < j.dim(); ++col)
      sum += d(row, col) * d(row, col) * (a * j.m_at(col).value() + b);
    worst = std::max(worst, std::abs(sum - (a * j.m_at(row).value() * cos_theta + b)));
  }
  return worst;
}

double parity_check(const ProbDist& p) {
  const double uniform_pair = 2.0 / p.j().dim();
  double worst = 0.0;
  for (int i = 0; i < p.size(); ++i)
    worst = std::max(worst, std::abs(p[i] + p[p.size() - 1 - i] - uniform_pair));
  return worst;
}

Rational parity_check_exact(const ExactProbDist& p) {
  const Rational uniform_pair(2, p.j().dim());
  Rational worst(0);
  for (int i = 0; i < p.size(); ++i) {
    Rational deviation = p[i] + p[p.size() - 1 - i] - uniform_pair;
    if (deviation < Rational(0)) deviation = -deviation;
    if (deviation > worst) worst = deviation;
  }
  return worst;
}

double convex_equality_check(const ClonerSpec& spec, const MixtureGeometry& geometry) {
  const ProbDist p = prob_vector(spec);
  const int dim = spec.j.dim();

  Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    lhs(i, i) = geometry.c_plus * p[i] + geometry.c_minus * p[dim - 1 - i];

  const BlochVector first(geometry.theta, 0.0);
  const BlochVector second(geometry.theta_prime, std::numbers::pi);
  const Eigen::MatrixXcd rot_first = spin_rotation(spec.j, first);
  const Eigen::MatrixXcd rot_second = spin_rotation(spec.j, second);
  const double sin_theta = std::sin(geometry.theta);
  const double sin_prime = std::sin(geometry.theta_prime);

  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    rhs += (p[i] * sin_prime) * (rot_first.col(i) * rot_first.col(i).adjoint());
    rhs += (p[i] * sin_theta) * (rot_second.col(i) * rot_second.col(i).adjoint());
  }
  return (lhs - rhs).norm();
}

}  // namespace nscloner
