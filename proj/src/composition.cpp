#include "nscloner/composition.hpp"

#include <cmath>
#include <stdexcept>

#include "nscloner/channel.hpp"

namespace nscloner {

double compose_predict(double f1, double f2) {
  if (!(f1 >= 0.0 && f1 <= 1.0) || !(f2 >= 0.0 && f2 <= 1.0))
    throw std::domain_error("compose_predict: fidelities must lie in [0, 1]");
  return f1 * f2 + (1.0 - f1) * (1.0 - f2);
}

Rational compose_predict(const Rational& f1, const Rational& f2) {
  if (f1 < Rational(0) || f1 > Rational(1) || f2 < Rational(0) || f2 > Rational(1))
    throw std::domain_error("compose_predict: fidelities must lie in [0, 1]");
  return f1 * f2 + (Rational(1) - f1) * (Rational(1) - f2);
}

double sequential_simulate(const Pipeline& pipeline, const BlochVector& input) {
  QubitDensity state = input.projector();
  for (const ClonerSpec& stage : pipeline.stages) state = single_clone(stage, state);
  const Eigen::Vector2cd ket = input.ket();
  return (ket.adjoint() * state * ket)(0).real();
}

namespace {

TwiceJ half_of(int copies, const char* what) {
  if (copies < 2) throw std::domain_error(std::string(what) + ": copy counts must be >= 2");
  return TwiceJ(copies);
}

}  // namespace

double prime_multiplicativity_check(int copies_first, int copies_second) {
  const TwiceJ j1 = half_of(copies_first, "prime_multiplicativity_check");
  const TwiceJ j2 = half_of(copies_second, "prime_multiplicativity_check");
  const Pipeline pipeline({make_named(ClonerKind::prime, j1), make_named(ClonerKind::prime, j2)});
  const double simulated = sequential_simulate(pipeline, BlochVector(0.0, 0.0));
  const double direct = prime_fidelity_exact(TwiceJ(copies_first * copies_second)).to_double();
  return std::abs(simulated - direct);
}

Rational prime_multiplicativity_exact(int copies_first, int copies_second) {
  const TwiceJ j1 = half_of(copies_first, "prime_multiplicativity_exact");
  const TwiceJ j2 = half_of(copies_second, "prime_multiplicativity_exact");
  const Rational composed =
      compose_predict(prime_fidelity_exact(j1), prime_fidelity_exact(j2));
  Rational deviation = composed - prime_fidelity_exact(TwiceJ(copies_first * copies_second));
  if (deviation < Rational(0)) deviation = -deviation;
  return deviation;
}

std::vector<std::pair<TwiceJ, Rational>> prime_limit_scan(TwiceJ j_max) {
  std::vector<std::pair<TwiceJ, Rational>> table;
  table.reserve(j_max.two_j - 1);
  for (int k = 2; k <= j_max.two_j; ++k) table.emplace_back(TwiceJ(k), prime_fidelity_exact(TwiceJ(k)));
  return table;
}

}  // namespace nscloner
