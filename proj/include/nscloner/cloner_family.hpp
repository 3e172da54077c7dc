#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nscloner/half_integer.hpp"
#include "nscloner/rational.hpp"

namespace nscloner {

/// One member of the one-parameter cloner family: p_{jm}(t) interpolates
/// between the two extremal nonnegative solutions of the no-signaling
/// eigenvalue problem. t = 1 is the optimal cloner, t = 0 the worst.
struct ClonerSpec {
  TwiceJ j;
  double t = 1.0;

  ClonerSpec(TwiceJ j_, double t_) : j(j_), t(t_) {
    if (j.two_j < 2) throw std::domain_error("ClonerSpec: cloning needs M = 2j >= 2 copies");
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("ClonerSpec: t must lie in [0, 1]");
  }
};

enum class ClonerKind { optimal, worst, uniform, prime };

/// Coefficient vector p_{jm}, stored descending in m (index 0 <-> m = +j).
/// Nonnegative with unit sum; the m <-> -m pair sums are all 2/(2j+1).
template <typename Scalar>
class BasicProbDist {
 public:
  BasicProbDist(TwiceJ j, std::vector<Scalar> values) : j_(j), p_(std::move(values)) {
    if (static_cast<int>(p_.size()) != j_.dim())
      throw std::invalid_argument("ProbDist: expected " + std::to_string(j_.dim()) +
                                  " coefficients, got " + std::to_string(p_.size()));
  }

  TwiceJ j() const { return j_; }
  int size() const { return static_cast<int>(p_.size()); }
  const Scalar& operator[](int index) const { return p_[index]; }
  const Scalar& at(HalfInt m) const { return p_[j_.index_of(m)]; }
  const std::vector<Scalar>& values() const { return p_; }

 private:
  TwiceJ j_;
  std::vector<Scalar> p_;
};

using ProbDist = BasicProbDist<double>;
using ExactProbDist = BasicProbDist<Rational>;

/// p_{jm}(t) = t (j+m)/(j(2j+1)) + (1-t) (j-m)/(j(2j+1)).
ProbDist prob_vector(const ClonerSpec& spec);
ExactProbDist prob_vector_exact(TwiceJ j, const Rational& t);

/// F_j(t) = (2j - 1 + 2(j+1) t) / (6j).
double fidelity_of(const ClonerSpec& spec);
Rational fidelity_exact(TwiceJ j, const Rational& t);

/// F = (1 + <m>/j) / 2, the single-clone fidelity of an arbitrary
/// coefficient vector.
double fidelity_from_probs(const ProbDist& p);
Rational fidelity_from_probs_exact(const ExactProbDist& p);

/// Fidelities reachable by the family: [1 - (4j+1)/(6j), (4j+1)/(6j)],
/// endpoints included.
struct FidelityInterval {
  double lo = 0.0;
  double hi = 1.0;
};

FidelityInterval allowed_interval(TwiceJ j);
Rational max_fidelity_exact(TwiceJ j);

/// Inverts F_j(t): t = (6jF - 2j + 1) / (2(j+1)). Requests outside the
/// allowed interval throw std::out_of_range naming the interval bounds.
ClonerSpec t_from_fidelity(TwiceJ j, double fidelity);

/// The named family members: t = 1 (optimal), 0 (worst), 1/2 (uniform),
/// (2j+5)/(4(j+1)) (prime).
Rational named_t(ClonerKind kind, TwiceJ j);
ClonerSpec make_named(ClonerKind kind, TwiceJ j);

/// F^P_j = (2j+1)/(4j), the fidelity of the prime cloner.
Rational prime_fidelity_exact(TwiceJ j);

std::string to_string(ClonerKind kind);
ClonerKind cloner_kind_from_string(const std::string& name);

}  // namespace nscloner
