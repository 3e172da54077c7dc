#pragma once

#include <Eigen/Dense>

#include "nscloner/bloch.hpp"
#include "nscloner/half_integer.hpp"
#include "nscloner/rational.hpp"

namespace nscloner {

// Spin-j angular-momentum algebra on the symmetric subspace of M = 2j
// qubits. Conventions, used consistently everywhere:
//   * basis index i <-> m = j - i (descending m, so index 0 is m = +j);
//   * rotations are z-y-z Euler rotations R(phi, theta, 0)
//     = exp(-i phi Jz) exp(-i theta Jy);
//   * qubit |0> is spin-up (+z).
// Only |d| magnitudes enter the no-signaling machinery, so the phase
// convention is observationally irrelevant there; it is fixed here so the
// channel module and the full-space oracle agree exactly.

/// Angular momentum J_z in the spin-j representation: diag(j, j-1, ..., -j).
Eigen::MatrixXd spin_jz(TwiceJ j);

/// Raising operator J+ with <j,m+1|J+|j,m> = sqrt(j(j+1) - m(m+1)).
Eigen::MatrixXd spin_jplus(TwiceJ j);

/// Reduced Wigner rotation matrix d^{(j)}(theta) = exp(-i theta Jy) in the
/// Jz eigenbasis. Real and orthogonal; evaluated by the explicit sum formula
/// with log-factorial stabilization (accurate to ~1e-12 for 2j <= 40).
Eigen::MatrixXd wigner_d(TwiceJ j, double theta);

/// Full rotation R(phi, theta) = exp(-i phi Jz) d^{(j)}(theta). Column k is
/// the rotated Dicke ket |n; j, m_k> expressed in the z basis.
Eigen::MatrixXcd spin_rotation(TwiceJ j, const BlochVector& axis);

/// Rotated Dicke basis state |n; j m> in the z Dicke basis.
struct DickeKet {
  TwiceJ j;
  HalfInt m;
  BlochVector orientation;
  Eigen::VectorXcd coeffs;
};

/// Column m of R(phi, theta) applied to |z; j m>.
/// Throws std::domain_error for m outside {-j, ..., j}.
DickeKet dicke_ket(TwiceJ j, HalfInt m, const BlochVector& axis);

/// Expands a Dicke ket into the computational basis of the full 2^M qubit
/// space by symmetrizing (j+m) spin-up and (j-m) spin-down factors along the
/// ket's orientation. Oracle-scale only: requires 2j <= 12.
///
/// Index convention: qubit q contributes bit 2^(M-1-q); a set bit means
/// spin-down, so the all-up Dicke state |z; j, j> sits at index 0.
Eigen::VectorXcd embed_full_space(const DickeKet& ket);

/// Probability that one clone drawn from |n; j m> points along +n:
/// C(2j-1, j-m) / C(2j, j-m), exactly (j+m)/(2j) as a rational.
Rational clone_overlap_weight(TwiceJ j, HalfInt m);

}  // namespace nscloner
