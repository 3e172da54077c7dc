#include "nscloner/cloner_family.hpp"

#include <algorithm>
#include <cmath>

namespace nscloner {

namespace {

// With doubled integers k = 2j, q = 2m the family reads
//   p_{jm}(t) = [t (k+q) + (1-t)(k-q)] / (k(k+1)),
// which keeps every quantity integer-valued before the final division.
long long denom(TwiceJ j) { return static_cast<long long>(j.two_j) * (j.two_j + 1); }

}  // namespace

ProbDist prob_vector(const ClonerSpec& spec) {
  const int k = spec.j.two_j;
  const double den = static_cast<double>(denom(spec.j));
  std::vector<double> p(spec.j.dim());
  for (int i = 0; i < spec.j.dim(); ++i) {
    const int q = spec.j.m_at(i).twice;
    p[i] = (spec.t * (k + q) + (1.0 - spec.t) * (k - q)) / den;
  }
  return ProbDist(spec.j, std::move(p));
}

ExactProbDist prob_vector_exact(TwiceJ j, const Rational& t) {
  if (j.two_j < 2) throw std::domain_error("prob_vector_exact: cloning needs 2j >= 2");
  if (t < Rational(0) || t > Rational(1))
    throw std::domain_error("prob_vector_exact: t must lie in [0, 1]");
  const int k = j.two_j;
  const Rational one_minus_t = Rational(1) - t;
  std::vector<Rational> p(j.dim());
  for (int i = 0; i < j.dim(); ++i) {
    const int q = j.m_at(i).twice;
    p[i] = (t * Rational(k + q) + one_minus_t * Rational(k - q)) / Rational(denom(j));
  }
  return ExactProbDist(j, std::move(p));
}

double fidelity_of(const ClonerSpec& spec) {
  const int k = spec.j.two_j;
  return (k - 1 + (k + 2) * spec.t) / (3.0 * k);
}

Rational fidelity_exact(TwiceJ j, const Rational& t) {
  const int k = j.two_j;
  return (Rational(k - 1) + Rational(k + 2) * t) / Rational(3LL * k);
}

double fidelity_from_probs(const ProbDist& p) {
  const int k = p.j().two_j;
  double mean_q = 0.0;  // sum of (2m) p_{jm}
  for (int i = 0; i < p.size(); ++i) mean_q += p.j().m_at(i).twice * p[i];
  return 0.5 * (1.0 + mean_q / k);
}

Rational fidelity_from_probs_exact(const ExactProbDist& p) {
  const int k = p.j().two_j;
  Rational mean_q(0);
  for (int i = 0; i < p.size(); ++i) mean_q += Rational(p.j().m_at(i).twice) * p[i];
  return (Rational(1) + mean_q / Rational(k)) / Rational(2);
}

Rational max_fidelity_exact(TwiceJ j) {
  return Rational(2LL * j.two_j + 1, 3LL * j.two_j);  // (4j+1)/(6j)
}

FidelityInterval allowed_interval(TwiceJ j) {
  const Rational hi = max_fidelity_exact(j);
  return FidelityInterval{(Rational(1) - hi).to_double(), hi.to_double()};
}

ClonerSpec t_from_fidelity(TwiceJ j, double fidelity) {
  const Rational hi = max_fidelity_exact(j);
  const Rational lo = Rational(1) - hi;
  if (!(fidelity >= lo.to_double() && fidelity <= hi.to_double()))
    throw std::out_of_range("t_from_fidelity: F = " + std::to_string(fidelity) +
                            " outside the allowed interval [" + lo.str() + ", " + hi.str() +
                            "] for 2j = " + std::to_string(j.two_j));
  const int k = j.two_j;
  const double t = (3.0 * k * fidelity - k + 1) / (k + 2);
  return ClonerSpec(j, std::clamp(t, 0.0, 1.0));  // guard rounding at the endpoints only
}

Rational named_t(ClonerKind kind, TwiceJ j) {
  switch (kind) {
    case ClonerKind::optimal:
      return Rational(1);
    case ClonerKind::worst:
      return Rational(0);
    case ClonerKind::uniform:
      return Rational(1, 2);
    case ClonerKind::prime:
      return Rational(j.two_j + 5, 2LL * (j.two_j + 2));  // (2j+5)/(4(j+1))
  }
  throw std::logic_error("named_t: unknown kind");
}

ClonerSpec make_named(ClonerKind kind, TwiceJ j) {
  return ClonerSpec(j, named_t(kind, j).to_double());
}

Rational prime_fidelity_exact(TwiceJ j) {
  return Rational(j.two_j + 1, 2LL * j.two_j);  // (2j+1)/(4j)
}

std::string to_string(ClonerKind kind) {
  switch (kind) {
    case ClonerKind::optimal:
      return "optimal";
    case ClonerKind::worst:
      return "worst";
    case ClonerKind::uniform:
      return "uniform";
    case ClonerKind::prime:
      return "prime";
  }
  return "?";
}

ClonerKind cloner_kind_from_string(const std::string& name) {
  if (name == "optimal") return ClonerKind::optimal;
  if (name == "worst") return ClonerKind::worst;
  if (name == "uniform") return ClonerKind::uniform;
  if (name == "prime") return ClonerKind::prime;
  throw std::invalid_argument("unknown cloner kind: " + name);
}

}  // namespace nscloner
