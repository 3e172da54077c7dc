#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "nscloner/pseudospin.hpp"
#include "nscloner/rng.hpp"

using namespace nscloner;
using std::numbers::pi;

namespace {

// Independent rotation oracle: diagonalize Jy (built from the ladder
// matrix elements, not via spin_jplus) and exponentiate the spectrum.
Eigen::MatrixXd wigner_d_oracle(int two_j, double theta) {
  const int dim = two_j + 1;
  const double j = 0.5 * two_j;
  Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 1; i < dim; ++i) {
    const double m = j - i;
    const double amp = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    jy(i - 1, i) = std::complex<double>(0.0, -0.5) * amp;
    jy(i, i - 1) = std::complex<double>(0.0, 0.5) * amp;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(jy);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) {
    const double angle = -theta * solver.eigenvalues()(i);
    phases(i) = std::complex<double>(std::cos(angle), std::sin(angle));
  }
  const Eigen::MatrixXcd d =
      solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  REQUIRE(d.imag().cwiseAbs().maxCoeff() < 1e-12);
  return d.real();
}

}  // namespace

TEST_CASE("half-integer bookkeeping") {
  const TwiceJ j(3);
  CHECK(j.dim() == 4);
  CHECK(j.copies() == 3);
  CHECK(j.j() == doctest::Approx(1.5));
  CHECK(j.m_at(0).twice == 3);
  CHECK(j.m_at(3).twice == -3);
  CHECK(j.index_of(HalfInt::from_twice(1)) == 1);
  CHECK(j.m_at(1).str() == "1/2");
  CHECK_THROWS_AS(j.index_of(HalfInt::from_twice(2)), std::domain_error);  // wrong parity
  CHECK_THROWS_AS(j.index_of(HalfInt::from_twice(5)), std::domain_error);  // |m| > j
  CHECK_THROWS_AS(TwiceJ(0), std::domain_error);
}

TEST_CASE("wigner_d spin-1/2 is the plane rotation") {
  for (const double theta : {0.0, 0.3, 1.2, pi / 2, 2.9, pi}) {
    const Eigen::MatrixXd d = wigner_d(TwiceJ(1), theta);
    CHECK(d(0, 0) == doctest::Approx(std::cos(0.5 * theta)).epsilon(1e-15));
    CHECK(d(0, 1) == doctest::Approx(-std::sin(0.5 * theta)).epsilon(1e-15));
    CHECK(d(1, 0) == doctest::Approx(std::sin(0.5 * theta)).epsilon(1e-15));
    CHECK(d(1, 1) == doctest::Approx(std::cos(0.5 * theta)).epsilon(1e-15));
  }
}

TEST_CASE("wigner_d at theta = 0 is the identity") {
  for (const int two_j : {1, 2, 5, 12}) {
    const TwiceJ j(two_j);
    const Eigen::MatrixXd d = wigner_d(j, 0.0);
    CHECK((d - Eigen::MatrixXd::Identity(j.dim(), j.dim())).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("wigner_d spin-1 quarter turn") {
  // Frozen from the matrix-exponential oracle.
  const double irt2 = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d expected;
  expected << 0.5, -irt2, 0.5, irt2, 0.0, -irt2, 0.5, irt2, 0.5;
  const Eigen::MatrixXd d = wigner_d(TwiceJ(2), pi / 2);
  CHECK((d - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(std::abs(d(1, 1)) < 1e-15);
  CHECK((d - wigner_d_oracle(2, pi / 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("wigner_d matches the matrix-exponential oracle") {
  Rng64 rng(7);
  for (const int two_j : {1, 2, 3, 5, 8, 13, 20}) {
    for (int draw = 0; draw < 5; ++draw) {
      const double theta = rng.uniform(-pi, pi);
      const double diff =
          (wigner_d(TwiceJ(two_j), theta) - wigner_d_oracle(two_j, theta)).cwiseAbs().maxCoeff();
      CHECK(diff < 1e-12);
    }
  }
}

TEST_CASE("wigner_d orthogonality up to 2j = 20") {
  Rng64 rng(11);
  for (int two_j = 1; two_j <= 20; ++two_j) {
    const TwiceJ j(two_j);
    const double theta = rng.uniform(0.0, pi);
    const Eigen::MatrixXd d = wigner_d(j, theta);
    const double residual =
        (d * d.transpose() - Eigen::MatrixXd::Identity(j.dim(), j.dim())).cwiseAbs().maxCoeff();
    CHECK(residual < 1e-12);
  }
}

TEST_CASE("wigner_d magnitude symmetries") {
  Rng64 rng(13);
  for (const int two_j : {2, 3, 7, 14}) {
    const TwiceJ j(two_j);
    const double theta = rng.uniform(0.0, pi);
    const Eigen::MatrixXd d = wigner_d(j, theta);
    for (int r = 0; r < j.dim(); ++r)
      for (int c = 0; c < j.dim(); ++c) {
        CHECK(std::abs(d(r, c)) == doctest::Approx(std::abs(d(c, r))).epsilon(1e-12));
        CHECK(std::abs(d(r, c)) ==
              doctest::Approx(std::abs(d(j.dim() - 1 - r, j.dim() - 1 - c))).epsilon(1e-12));
      }
  }
}

TEST_CASE("wigner_d composes about the fixed axis") {
  Rng64 rng(17);
  for (const int two_j : {1, 4, 9, 16}) {
    const TwiceJ j(two_j);
    const double t1 = rng.uniform(0.0, pi);
    const double t2 = rng.uniform(0.0, pi);
    const double diff =
        (wigner_d(j, t1) * wigner_d(j, t2) - wigner_d(j, t1 + t2)).cwiseAbs().maxCoeff();
    CHECK(diff < 1e-11);
  }
}

TEST_CASE("wigner_d accuracy at 2j = 40") {
  Rng64 rng(19);
  for (int draw = 0; draw < 3; ++draw) {
    const double theta = rng.uniform(0.0, pi);
    const double diff =
        (wigner_d(TwiceJ(40), theta) - wigner_d_oracle(40, theta)).cwiseAbs().maxCoeff();
    CHECK(diff < 1e-11);
  }
}

TEST_CASE("dicke_ket along z is a basis vector") {
  const DickeKet ket = dicke_ket(TwiceJ(1), HalfInt::from_twice(1), BlochVector(0.0, 0.0));
  CHECK(std::abs(ket.coeffs(0) - 1.0) < 1e-15);
  CHECK(std::abs(ket.coeffs(1)) < 1e-15);
}

TEST_CASE("dicke_ket magnitudes at the equator") {
  // Frozen from the oracle: |coeffs| = (1/2, 1/sqrt(2), 1/2) for j=1, m=1.
  const DickeKet ket = dicke_ket(TwiceJ(2), HalfInt::from_int(1), BlochVector(pi / 2, 0.0));
  CHECK(std::abs(ket.coeffs(0)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(ket.coeffs(1)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(ket.coeffs(2)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ket.coeffs.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dicke_ket rejects invalid m") {
  CHECK_THROWS_AS(dicke_ket(TwiceJ(2), HalfInt::from_twice(1), BlochVector(0.1, 0.2)),
                  std::domain_error);
  CHECK_THROWS_AS(dicke_ket(TwiceJ(2), HalfInt::from_int(2), BlochVector(0.1, 0.2)),
                  std::domain_error);
}

TEST_CASE("dicke_ket overlap with z states has Wigner magnitude") {
  Rng64 rng(23);
  for (const int two_j : {1, 3, 6}) {
    const TwiceJ j(two_j);
    const BlochVector axis = rng.bloch();
    const Eigen::MatrixXd d = wigner_d(j, axis.theta);
    for (int col = 0; col < j.dim(); ++col) {
      const DickeKet ket = dicke_ket(j, j.m_at(col), axis);
      for (int row = 0; row < j.dim(); ++row)
        CHECK(std::abs(ket.coeffs(row)) ==
              doctest::Approx(std::abs(d(row, col))).epsilon(1e-12));
    }
  }
}

TEST_CASE("antipodal dicke kets flip m up to phase") {
  Rng64 rng(29);
  for (const int two_j : {1, 2, 5}) {
    const TwiceJ j(two_j);
    const BlochVector axis = rng.bloch();
    for (int i = 0; i < j.dim(); ++i) {
      const DickeKet flipped = dicke_ket(j, j.m_at(i), axis.antipode());
      const DickeKet mirror = dicke_ket(j, -j.m_at(i), axis);
      const double overlap = std::abs(flipped.coeffs.dot(mirror.coeffs));
      CHECK(overlap == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("embedding of z-aligned Dicke states") {
  // All spins up: a single computational basis state (index 0, since a set
  // bit marks spin-down).
  const Eigen::VectorXcd top = embed_full_space(dicke_ket(TwiceJ(2), HalfInt::from_int(1),
                                                          BlochVector(0.0, 0.0)));
  CHECK(std::abs(top(0) - 1.0) < 1e-14);
  CHECK(top.tail(3).cwiseAbs().maxCoeff() < 1e-14);

  // One spin down: equal weight on the two single-bit masks.
  const Eigen::VectorXcd mid = embed_full_space(dicke_ket(TwiceJ(2), HalfInt::from_int(0),
                                                          BlochVector(0.0, 0.0)));
  const double irt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(mid(1)) == doctest::Approx(irt2).epsilon(1e-14));
  CHECK(std::abs(mid(2)) == doctest::Approx(irt2).epsilon(1e-14));
  CHECK(std::abs(mid(0)) < 1e-14);
  CHECK(std::abs(mid(3)) < 1e-14);

  // j=3/2, m=1/2: one down spin among three, amplitude 1/sqrt(3) each.
  const Eigen::VectorXcd three = embed_full_space(dicke_ket(TwiceJ(3), HalfInt::from_twice(1),
                                                            BlochVector(0.0, 0.0)));
  const double irt3 = 1.0 / std::sqrt(3.0);
  for (const int index : {1, 2, 4})
    CHECK(std::abs(three(index)) == doctest::Approx(irt3).epsilon(1e-14));
  for (const int index : {0, 3, 5, 6, 7}) CHECK(std::abs(three(index)) < 1e-14);
}

TEST_CASE("embedding preserves inner products") {
  Rng64 rng(31);
  for (int two_j = 1; two_j <= 8; ++two_j) {
    const TwiceJ j(two_j);
    const BlochVector a = rng.bloch();
    const BlochVector b = rng.bloch();
    const Eigen::MatrixXcd rot_a = spin_rotation(j, a);
    const Eigen::MatrixXcd rot_b = spin_rotation(j, b);
    for (int r = 0; r < j.dim(); ++r)
      for (int c = 0; c < j.dim(); ++c) {
        const std::complex<double> full = embed_full_space(dicke_ket(j, j.m_at(r), a))
                                              .dot(embed_full_space(dicke_ket(j, j.m_at(c), b)));
        const std::complex<double> spin = rot_a.col(r).dot(rot_b.col(c));
        CHECK(std::abs(full - spin) < 1e-12);
      }
  }
}

TEST_CASE("embedding rejects oracle overflow") {
  CHECK_THROWS_AS(embed_full_space(dicke_ket(TwiceJ(13), HalfInt::from_twice(1),
                                             BlochVector(0.0, 0.0))),
                  std::length_error);
}

TEST_CASE("clone overlap weight") {
  CHECK(clone_overlap_weight(TwiceJ(2), HalfInt::from_int(1)) == Rational(1));
  CHECK(clone_overlap_weight(TwiceJ(2), HalfInt::from_int(-1)) == Rational(0));
  // C(4,2)/C(5,2) = 6/10
  CHECK(clone_overlap_weight(TwiceJ(5), HalfInt::from_twice(1)) == Rational(3, 5));
  CHECK_THROWS_AS(clone_overlap_weight(TwiceJ(2), HalfInt::from_twice(1)), std::domain_error);
}

TEST_CASE("clone overlap weight equals (j+m)/(2j) exactly") {
  for (int two_j = 2; two_j <= 40; ++two_j) {
    const TwiceJ j(two_j);
    for (int i = 0; i < j.dim(); ++i) {
      const HalfInt m = j.m_at(i);
      CHECK(clone_overlap_weight(j, m) == Rational(two_j + m.twice, 2LL * two_j));
    }
  }
}
