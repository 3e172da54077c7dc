#include "nscloner/pseudospin.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace nscloner {

namespace {

// n! in extended precision for n <= 300 (well inside the long double
// range). The direct factorial ratio keeps the Wigner sum accurate to
// ~1e-13 at 2j = 40, where a log/exp evaluation already loses four digits
// to cancellation.
constexpr int kMaxDirectFactorial = 300;

const long double* factorial_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kMaxDirectFactorial + 1);
    t[0] = 1.0L;
    for (int n = 1; n <= kMaxDirectFactorial; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table.data();
}

long double log_factorial(int n) { return std::lgamma(static_cast<long double>(n) + 1.0L); }

}  // namespace

Eigen::MatrixXd spin_jz(TwiceJ j) {
  Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(j.dim(), j.dim());
  for (int i = 0; i < j.dim(); ++i) jz(i, i) = j.m_at(i).value();
  return jz;
}

Eigen::MatrixXd spin_jplus(TwiceJ j) {
  Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(j.dim(), j.dim());
  const double jj = j.j();
  for (int i = 1; i < j.dim(); ++i) {
    const double m = j.m_at(i).value();  // J+ maps index i to index i-1
    jp(i - 1, i) = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
  }
  return jp;
}

Eigen::MatrixXd wigner_d(TwiceJ j, double theta) {
  if (!std::isfinite(theta)) throw std::domain_error("wigner_d: theta must be finite");
  const int k = j.two_j;
  const int dim = j.dim();
  if (theta == 0.0) return Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd d(dim, dim);

  const long double c = std::cos(0.5L * static_cast<long double>(theta));
  const long double s = std::sin(0.5L * static_cast<long double>(theta));
  const bool direct = k <= kMaxDirectFactorial;
  const long double* fact = factorial_table();

  // d_{m'm} = sum_s (-1)^{m'-m+s} sqrt((j+m')!(j-m')!(j+m)!(j-m)!)
  //           / (s! (j+m-s)! (j-m'-s)! (m'-m+s)!)
  //           * c^{2j+m-m'-2s} * sin^{m'-m+2s}.
  // All exponents and factorial arguments are integers; with doubled
  // indices q' = 2m', q = 2m they read below in terms of (k +/- q)/2.
  for (int row = 0; row < dim; ++row) {
    const int qp = k - 2 * row;  // 2m'
    for (int col = 0; col < dim; ++col) {
      const int q = k - 2 * col;  // 2m
      const int j_plus_mp = (k + qp) / 2;
      const int j_minus_mp = (k - qp) / 2;
      const int j_plus_m = (k + q) / 2;
      const int j_minus_m = (k - q) / 2;
      const int mp_minus_m = (qp - q) / 2;

      const long double pref =
          direct ? std::sqrt(fact[j_plus_mp]) * std::sqrt(fact[j_minus_mp]) *
                       std::sqrt(fact[j_plus_m]) * std::sqrt(fact[j_minus_m])
                 : 0.0L;
      const long double log_pref =
          direct ? 0.0L
                 : 0.5L * (log_factorial(j_plus_mp) + log_factorial(j_minus_mp) +
                           log_factorial(j_plus_m) + log_factorial(j_minus_m));

      const int s_min = std::max(0, -mp_minus_m);
      const int s_max = std::min(j_plus_m, j_minus_mp);
      long double sum = 0.0L;
      for (int sm = s_min; sm <= s_max; ++sm) {
        const int c_pow = k + (q - qp) / 2 - 2 * sm;  // 2j + m - m' - 2s
        const int s_pow = mp_minus_m + 2 * sm;
        if ((c == 0.0L && c_pow > 0) || (s == 0.0L && s_pow > 0)) continue;
        long double term;
        if (direct) {
          term = pref / (fact[sm] * fact[j_plus_m - sm] * fact[j_minus_mp - sm] *
                         fact[mp_minus_m + sm]);
        } else {
          const long double log_den = log_factorial(sm) + log_factorial(j_plus_m - sm) +
                                      log_factorial(j_minus_mp - sm) +
                                      log_factorial(mp_minus_m + sm);
          term = std::exp(log_pref - log_den);
        }
        if (c_pow > 0) term *= std::pow(c, c_pow);
        if (s_pow > 0) term *= std::pow(s, s_pow);
        sum += ((mp_minus_m + sm) % 2 == 0) ? term : -term;
      }
      d(row, col) = static_cast<double>(sum);
    }
  }
  return d;
}

Eigen::MatrixXcd spin_rotation(TwiceJ j, const BlochVector& axis) {
  const Eigen::MatrixXd d = wigner_d(j, axis.theta);
  Eigen::MatrixXcd rot(j.dim(), j.dim());
  for (int row = 0; row < j.dim(); ++row) {
    const double angle = -axis.phi * j.m_at(row).value();
    const std::complex<double> phase(std::cos(angle), std::sin(angle));
    rot.row(row) = phase * d.row(row);
  }
  return rot;
}

DickeKet dicke_ket(TwiceJ j, HalfInt m, const BlochVector& axis) {
  const int col = j.index_of(m);
  const Eigen::MatrixXcd rot = spin_rotation(j, axis);
  return DickeKet{j, m, axis, rot.col(col)};
}

Eigen::VectorXcd embed_full_space(const DickeKet& ket) {
  const int copies = ket.j.copies();
  if (copies > 12) throw std::length_error("embed_full_space: oracle limited to 2j <= 12");

  const Eigen::Vector2cd up = ket.orientation.ket();
  const Eigen::Vector2cd down = ket.orientation.ket_down();
  const int n_down = ket.j.index_of(ket.m);  // j - m

  const std::size_t dim = std::size_t{1} << copies;
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(dim);
  // One term per bitmask with (j - m) down bits; the distinct product
  // states are orthonormal, so the binomial prefactor of the symmetrizer
  // normalizes the sum exactly.
  for (std::size_t mask = 0; mask < dim; ++mask) {
    if (std::popcount(mask) != n_down) continue;
    for (std::size_t basis = 0; basis < dim; ++basis) {
      std::complex<double> amp = 1.0;
      for (int q = 0; q < copies; ++q) {
        const std::size_t bit = std::size_t{1} << (copies - 1 - q);
        const int local = (basis & bit) ? 1 : 0;
        amp *= (mask & bit) ? down(local) : up(local);
      }
      state(basis) += amp;
    }
  }
  state /= std::sqrt(static_cast<double>(binomial(copies, n_down)));
  return state;
}

Rational clone_overlap_weight(TwiceJ j, HalfInt m) {
  const int n_down = j.index_of(m);  // j - m, throws on invalid m
  const long long total = binomial(j.copies(), n_down);
  const long long aligned = binomial(j.copies() - 1, n_down);
  return Rational(aligned, total);
}

}  // namespace nscloner
