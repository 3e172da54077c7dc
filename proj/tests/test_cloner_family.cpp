#include <cmath>
#include <string>

#include "doctest.h"
#include "nscloner/cloner_family.hpp"
#include "nscloner/rng.hpp"

using namespace nscloner;

namespace {

HalfInt m_int(int m) { return HalfInt::from_int(m); }

}  // namespace

TEST_CASE("cloner spec validation") {
  CHECK_THROWS_AS(ClonerSpec(TwiceJ(1), 0.5), std::domain_error);
  CHECK_THROWS_AS(ClonerSpec(TwiceJ(2), -0.1), std::domain_error);
  CHECK_THROWS_AS(ClonerSpec(TwiceJ(2), 1.1), std::domain_error);
  CHECK_NOTHROW(ClonerSpec(TwiceJ(2), 0.0));
  CHECK_NOTHROW(ClonerSpec(TwiceJ(2), 1.0));
}

TEST_CASE("optimal coefficient vector at j = 1") {
  const ExactProbDist p = prob_vector_exact(TwiceJ(2), Rational(1));
  CHECK(p.at(m_int(-1)) == Rational(0));
  CHECK(p.at(m_int(0)) == Rational(1, 3));
  CHECK(p.at(m_int(1)) == Rational(2, 3));

  const ProbDist f = prob_vector(ClonerSpec(TwiceJ(2), 1.0));
  CHECK(f.at(m_int(1)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(f.at(m_int(-1)) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("uniform coefficient vector at t = 1/2") {
  const ExactProbDist p = prob_vector_exact(TwiceJ(2), Rational(1, 2));
  for (int i = 0; i < p.size(); ++i) CHECK(p[i] == Rational(1, 3));
}

TEST_CASE("prime coefficient vector at j = 1") {
  const ExactProbDist p = prob_vector_exact(TwiceJ(2), Rational(7, 8));
  CHECK(p.at(m_int(-1)) == Rational(1, 12));
  CHECK(p.at(m_int(0)) == Rational(1, 3));
  CHECK(p.at(m_int(1)) == Rational(7, 12));
  CHECK(named_t(ClonerKind::prime, TwiceJ(2)) == Rational(7, 8));
}

TEST_CASE("prime coefficients match the closed form for all m") {
  // p_{jm} = (1 + 3m / (2j(j+1))) / (2j+1), written with doubled integers.
  for (int two_j = 2; two_j <= 16; ++two_j) {
    const TwiceJ j(two_j);
    const ExactProbDist p = prob_vector_exact(j, named_t(ClonerKind::prime, j));
    for (int i = 0; i < p.size(); ++i) {
      const int q = j.m_at(i).twice;
      const Rational expected =
          (Rational(1) + Rational(3LL * q, static_cast<long long>(two_j) * (two_j + 2))) /
          Rational(two_j + 1);
      CHECK(p[i] == expected);
    }
    CHECK(fidelity_exact(j, named_t(ClonerKind::prime, j)) == prime_fidelity_exact(j));
  }
}

TEST_CASE("exact backend holds at the 2j = 64 scale") {
  const TwiceJ j(64);
  for (const Rational& t : {Rational(0), Rational(7, 8), Rational(1)}) {
    const ExactProbDist p = prob_vector_exact(j, t);
    Rational sum(0);
    for (int i = 0; i < p.size(); ++i) {
      sum += p[i];
      CHECK(p[i] + p[p.size() - 1 - i] == Rational(2, 65));
    }
    CHECK(sum == Rational(1));
    CHECK(fidelity_from_probs_exact(p) == fidelity_exact(j, t));
  }
}

TEST_CASE("fidelity values") {
  CHECK(fidelity_exact(TwiceJ(2), Rational(1)) == Rational(5, 6));
  CHECK(fidelity_exact(TwiceJ(2), Rational(1, 2)) == Rational(1, 2));
  CHECK(fidelity_exact(TwiceJ(3), Rational(1)) == Rational(7, 9));
  CHECK(fidelity_of(ClonerSpec(TwiceJ(2), 1.0)) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("fidelity from an arbitrary coefficient vector") {
  // Perfect cloning: all weight on m = +j.
  const ProbDist delta(TwiceJ(4), {1.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(fidelity_from_probs(delta) == doctest::Approx(1.0).epsilon(1e-15));

  const ProbDist uniform(TwiceJ(2), {1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(fidelity_from_probs(uniform) == doctest::Approx(0.5).epsilon(1e-15));

  // The prime vector at j = 1 gives F^P = 3/4.
  const ExactProbDist prime = prob_vector_exact(TwiceJ(2), Rational(7, 8));
  CHECK(fidelity_from_probs_exact(prime) == Rational(3, 4));
}

TEST_CASE("fidelity inversion") {
  CHECK(t_from_fidelity(TwiceJ(2), 5.0 / 6.0).t == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t_from_fidelity(TwiceJ(2), 0.5).t == doctest::Approx(0.5).epsilon(1e-15));
  try {
    t_from_fidelity(TwiceJ(2), 0.9);
    FAIL("expected std::out_of_range");
  } catch (const std::out_of_range& e) {
    const std::string message = e.what();
    CHECK(message.find("1/6") != std::string::npos);
    CHECK(message.find("5/6") != std::string::npos);
  }
}

TEST_CASE("named cloners") {
  CHECK(make_named(ClonerKind::prime, TwiceJ(2)).t == doctest::Approx(7.0 / 8.0).epsilon(1e-15));
  const ClonerSpec optimal4 = make_named(ClonerKind::optimal, TwiceJ(4));
  CHECK(optimal4.t == 1.0);
  CHECK(fidelity_of(optimal4) == doctest::Approx(0.75).epsilon(1e-15));
  const ClonerSpec worst = make_named(ClonerKind::worst, TwiceJ(2));
  CHECK(worst.t == 0.0);
  CHECK(fidelity_of(worst) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(make_named(ClonerKind::uniform, TwiceJ(6)).t == 0.5);
  CHECK(cloner_kind_from_string("prime") == ClonerKind::prime);
  CHECK_THROWS_AS(cloner_kind_from_string("best"), std::invalid_argument);
}

TEST_CASE("allowed fidelity interval") {
  const FidelityInterval j1 = allowed_interval(TwiceJ(2));
  CHECK(j1.lo == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(j1.hi == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(max_fidelity_exact(TwiceJ(3)) == Rational(7, 9));
  CHECK(Rational(1) - max_fidelity_exact(TwiceJ(3)) == Rational(2, 9));
  // Large-copy limit: the interval closes on [1/3, 2/3].
  const FidelityInterval limit = allowed_interval(TwiceJ(1000));
  CHECK(std::abs(limit.hi - 2.0 / 3.0) < 1e-3);
  CHECK(std::abs(limit.lo - 1.0 / 3.0) < 1e-3);
}

TEST_CASE("interval endpoints are inclusive") {
  const FidelityInterval interval = allowed_interval(TwiceJ(2));
  CHECK(t_from_fidelity(TwiceJ(2), interval.hi).t == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t_from_fidelity(TwiceJ(2), interval.lo).t == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("family identities over random specs") {
  Rng64 rng(37);
  for (int draw = 0; draw < 200; ++draw) {
    const int two_j = 2 + static_cast<int>(rng.uniform() * 19.0);  // up to 2j = 20
    const TwiceJ j(two_j);
    const long long den = 1 + static_cast<long long>(rng.uniform() * 64.0);
    const long long num = static_cast<long long>(rng.uniform() * static_cast<double>(den + 1));
    const Rational t(std::min(num, den), den);

    const ExactProbDist p = prob_vector_exact(j, t);
    Rational sum(0);
    for (int i = 0; i < p.size(); ++i) {
      sum += p[i];
      CHECK(p[i] >= Rational(0));
      CHECK(p[i] + p[p.size() - 1 - i] == Rational(2, two_j + 1));
    }
    CHECK(sum == Rational(1));

    // p_{j,-j} vanishes exactly at the optimal cloner and only there.
    CHECK(p.at(j.min_m()).is_zero() == (t == Rational(1)));

    CHECK(fidelity_exact(j, t) + fidelity_exact(j, Rational(1) - t) == Rational(1));
    CHECK(fidelity_from_probs_exact(p) == fidelity_exact(j, t));

    const ClonerSpec spec(j, t.to_double());
    CHECK(std::abs(fidelity_from_probs(prob_vector(spec)) - fidelity_of(spec)) < 1e-14);
    CHECK(std::abs(t_from_fidelity(j, fidelity_of(spec)).t - spec.t) < 1e-14);
  }
}

TEST_CASE("prob dist accessors") {
  CHECK_THROWS_AS(ProbDist(TwiceJ(2), {0.5, 0.5}), std::invalid_argument);
  const ProbDist p = prob_vector(ClonerSpec(TwiceJ(4), 0.25));
  CHECK(p.size() == 5);
  CHECK(p[0] == p.at(m_int(2)));
  CHECK_THROWS_AS(p.at(HalfInt::from_twice(1)), std::domain_error);
}
