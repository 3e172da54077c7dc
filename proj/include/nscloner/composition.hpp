#pragma once

#include <utility>
#include <vector>

#include "nscloner/bloch.hpp"
#include "nscloner/cloner_family.hpp"

namespace nscloner {

/// A sequence of cloners, each stage fed one reduced clone of the previous
/// stage. Correlations between sibling clones are not tracked; the
/// composition law is a statement about single-clone marginals.
struct Pipeline {
  std::vector<ClonerSpec> stages;

  explicit Pipeline(std::vector<ClonerSpec> stages_) : stages(std::move(stages_)) {
    if (stages.empty()) throw std::invalid_argument("Pipeline: at least one stage required");
  }
};

/// Fidelity of two chained cloners: F1 F2 + (1 - F1)(1 - F2).
double compose_predict(double f1, double f2);
Rational compose_predict(const Rational& f1, const Rational& f2);

/// Simulates the pipeline through the channel: starting from |n><n|, each
/// stage maps the current qubit state through single_clone. Returns the
/// final overlap <n|rho|n>. Agrees with the compose_predict fold to ~1e-15.
double sequential_simulate(const Pipeline& pipeline, const BlochVector& input);

/// |simulated prime(M/2) o prime(N/2) - F^P_{MN/2}| through the float
/// channel. M, N >= 2.
double prime_multiplicativity_check(int copies_first, int copies_second);

/// The same composition in exact arithmetic; the prime family gives
/// exactly zero.
Rational prime_multiplicativity_exact(int copies_first, int copies_second);

/// (2j, F^P_j) for 2j = 2, 3, ..., j_max; F^P_j - 1/2 = 1/(4j) exactly.
std::vector<std::pair<TwiceJ, Rational>> prime_limit_scan(TwiceJ j_max);

}  // namespace nscloner
