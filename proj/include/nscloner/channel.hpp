#pragma once

#include <Eigen/Dense>

#include "nscloner/bloch.hpp"
#include "nscloner/cloner_family.hpp"
#include "nscloner/pseudospin.hpp"

namespace nscloner {

/// 2x2 density matrix in the {|0> = +z, |1> = -z} basis.
using QubitDensity = Eigen::Matrix2cd;

/// Output of the cloning map on the spin-j symmetric subspace, expressed in
/// the z Dicke basis (descending m).
struct SpinDensity {
  TwiceJ j;
  Eigen::MatrixXcd mat;
};

/// Throws std::invalid_argument unless rho is Hermitian, positive
/// semidefinite and unit-trace within tol.
void validate_density(const Eigen::MatrixXcd& rho, double tol = 1e-12);

/// rho = weight_up |n><n| + (1 - weight_up) |-n><-n| with weight_up >= 1/2.
/// The maximally mixed state decomposes along +z.
struct AntipodalDecomposition {
  double weight_up = 1.0;
  BlochVector axis;
};

AntipodalDecomposition spectral_decompose(const QubitDensity& rho, double tol = 1e-12);

/// The cloning map on a pure input: sum_m p_{jm} |n; jm><n; jm|.
SpinDensity apply_pure(const ClonerSpec& spec, const BlochVector& input);

/// Extension to mixed inputs by spectral decomposition into an antipodal
/// pure pair; convex-linear by construction.
SpinDensity apply_mixed(const ClonerSpec& spec, const QubitDensity& rho);

/// Reduced state of one clone. For input s|n><n| + (1-s)|-n><-n| this is
/// diagonal in the same basis with entries (F~, 1 - F~),
/// F~ = s F_j(t) + (1-s)(1 - F_j(t)).
QubitDensity single_clone(const ClonerSpec& spec, const QubitDensity& rho);

/// Schmidt-form pure output sum_m sqrt(p_{jm}) |n; jm> (x) |R_jm(n)>.
/// The machine register is a second spin-j system in its rotated Dicke
/// basis, which makes the machine states orthonormal per input.
struct SchmidtOutput {
  TwiceJ j;
  Eigen::VectorXd amplitudes;      // sqrt(p_{jm}), descending m
  Eigen::MatrixXcd clone_basis;    // column i: |n; j m_i> in the z basis
  Eigen::MatrixXcd machine_basis;  // column i: |R_{j m_i}(n)>

  /// The (2j+1)^2 state vector, clone register major.
  Eigen::VectorXcd full_state() const;
};

SchmidtOutput schmidt_output(const ClonerSpec& spec, const BlochVector& input);

/// Partial trace of |out><out| over the machine register.
Eigen::MatrixXcd trace_out_machine(const SchmidtOutput& out);

/// Full-space oracle: assembles sum_m p_{jm}|n; jm><n; jm| in the 2^M qubit
/// space via embed_full_space and traces out M-1 qubits. Requires 2j <= 8.
QubitDensity brute_force_single_clone(const ClonerSpec& spec, const BlochVector& input);

}  // namespace nscloner
