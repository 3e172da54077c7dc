#include "nscloner/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace nscloner {

void validate_density(const Eigen::MatrixXcd& rho, double tol) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("density matrix not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw std::invalid_argument("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (rho + rho.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("density matrix not positive semidefinite");
}

AntipodalDecomposition spectral_decompose(const QubitDensity& rho, double tol) {
  validate_density(rho, tol);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(0.5 * (rho + rho.adjoint()));
  const double w0 = solver.eigenvalues()(0);  // ascending
  const double w1 = solver.eigenvalues()(1);
  if (w1 - w0 <= tol) return AntipodalDecomposition{0.5, BlochVector(0.0, 0.0)};

  const Eigen::Vector2cd v = solver.eigenvectors().col(1);
  const double theta = 2.0 * std::atan2(std::abs(v(1)), std::abs(v(0)));
  double phi = 0.0;
  if (std::abs(v(0)) > tol && std::abs(v(1)) > tol) phi = std::arg(v(1)) - std::arg(v(0));
  return AntipodalDecomposition{w1, BlochVector(theta, phi)};
}

SpinDensity apply_pure(const ClonerSpec& spec, const BlochVector& input) {
  const ProbDist p = prob_vector(spec);
  const Eigen::MatrixXcd rot = spin_rotation(spec.j, input);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(spec.j.dim(), spec.j.dim());
  for (int i = 0; i < spec.j.dim(); ++i) out += p[i] * (rot.col(i) * rot.col(i).adjoint());
  return SpinDensity{spec.j, std::move(out)};
}

SpinDensity apply_mixed(const ClonerSpec& spec, const QubitDensity& rho) {
  const AntipodalDecomposition decomp = spectral_decompose(rho);
  const SpinDensity up = apply_pure(spec, decomp.axis);
  const SpinDensity down = apply_pure(spec, decomp.axis.antipode());
  return SpinDensity{spec.j, decomp.weight_up * up.mat + (1.0 - decomp.weight_up) * down.mat};
}

QubitDensity single_clone(const ClonerSpec& spec, const QubitDensity& rho) {
  const AntipodalDecomposition decomp = spectral_decompose(rho);
  const double fidelity = fidelity_of(spec);
  const double aligned = decomp.weight_up * fidelity + (1.0 - decomp.weight_up) * (1.0 - fidelity);
  const Eigen::Matrix2cd projector = decomp.axis.projector();
  return aligned * projector + (1.0 - aligned) * (Eigen::Matrix2cd::Identity() - projector);
}

Eigen::VectorXcd SchmidtOutput::full_state() const {
  const int dim = j.dim();
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        state(a * dim + b) += amplitudes(i) * clone_basis(a, i) * machine_basis(b, i);
  }
  return state;
}

SchmidtOutput schmidt_output(const ClonerSpec& spec, const BlochVector& input) {
  const ProbDist p = prob_vector(spec);
  Eigen::VectorXd amps(spec.j.dim());
  for (int i = 0; i < spec.j.dim(); ++i) amps(i) = std::sqrt(p[i]);
  const Eigen::MatrixXcd rot = spin_rotation(spec.j, input);
  return SchmidtOutput{spec.j, std::move(amps), rot, rot};
}

Eigen::MatrixXcd trace_out_machine(const SchmidtOutput& out) {
  const int dim = out.j.dim();
  const Eigen::VectorXcd psi = out.full_state();
  Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int r = 0; r < dim; ++r) reduced(a, b) += psi(a * dim + r) * std::conj(psi(b * dim + r));
  return reduced;
}

QubitDensity brute_force_single_clone(const ClonerSpec& spec, const BlochVector& input) {
  const int copies = spec.j.copies();
  if (copies > 8) throw std::length_error("brute_force_single_clone: oracle limited to 2j <= 8");

  const ProbDist p = prob_vector(spec);
  const std::size_t rest_dim = std::size_t{1} << (copies - 1);

  // Keep qubit 0 (the most significant bit): rho1_{ab} = sum_m p_m
  // sum_rest psi_m[a:rest] conj(psi_m[b:rest]).
  QubitDensity reduced = QubitDensity::Zero();
  for (int i = 0; i < spec.j.dim(); ++i) {
    const Eigen::VectorXcd psi = embed_full_space(dicke_ket(spec.j, spec.j.m_at(i), input));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        std::complex<double> sum = 0.0;
        for (std::size_t r = 0; r < rest_dim; ++r)
          sum += psi(a * rest_dim + r) * std::conj(psi(b * rest_dim + r));
        reduced(a, b) += p[i] * sum;
      }
  }
  return reduced;
}

}  // namespace nscloner
