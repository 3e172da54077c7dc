#include "nscloner/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include "nscloner/channel.hpp"
#include "nscloner/composition.hpp"
#include "nscloner/ns_verifier.hpp"
#include "nscloner/pseudospin.hpp"
#include "nscloner/rng.hpp"

namespace nscloner {

namespace {

constexpr double kDimGapTol = 1e-8;
constexpr double kRejectionGap = 1e-6;

// Descriptors use ';' so records stay single CSV cells.
std::string geom_desc(int draw, const MixtureGeometry& g) {
  return "draw=" + std::to_string(draw) + ";theta=" + fmt_g15(g.theta) +
         ";theta_prime=" + fmt_g15(g.theta_prime);
}

CheckRecord make_record(std::string check, int two_j, std::string t, std::string desc,
                        double residual, double tol) {
  CheckRecord record;
  record.check = std::move(check);
  record.two_j = two_j;
  record.t = std::move(t);
  record.descriptor = std::move(desc);
  record.residual = residual;
  record.tol = tol;
  record.pass = residual <= tol;
  return record;
}

ProbDist perturbed_probs(const ClonerSpec& spec, double eps) {
  ProbDist p = prob_vector(spec);
  if (eps == 0.0) return p;
  std::vector<double> values = p.values();
  values.front() += eps;  // m = +j
  return ProbDist(spec.j, std::move(values));
}

void wigner_checks(const VerifyConfig& config, Rng64& rng, VerificationReport& report) {
  for (int two_j = 1; two_j <= config.max_two_j; ++two_j) {
    const TwiceJ j(two_j);
    const double ortho_tol = two_j <= 20 ? 1e-12 : 1e-11;
    for (int draw = 0; draw < 4; ++draw) {
      const double theta = rng.uniform(0.0, std::numbers::pi);
      const Eigen::MatrixXd d = wigner_d(j, theta);

      const double ortho = (d * d.transpose() - Eigen::MatrixXd::Identity(j.dim(), j.dim()))
                               .cwiseAbs()
                               .maxCoeff();
      report.add(make_record("wigner_orthogonality", two_j, "-",
                             "draw=" + std::to_string(draw) + ";theta=" + fmt_g15(theta), ortho,
                             ortho_tol));

      double symmetry = 0.0;
      for (int r = 0; r < j.dim(); ++r)
        for (int c = 0; c < j.dim(); ++c) {
          const double mag = std::abs(d(r, c));
          symmetry = std::max(symmetry, std::abs(mag - std::abs(d(c, r))));
          symmetry = std::max(symmetry, std::abs(mag - std::abs(d(j.dim() - 1 - r, j.dim() - 1 - c))));
        }
      report.add(make_record("wigner_symmetry", two_j, "-", "draw=" + std::to_string(draw),
                             symmetry, 1e-12));

      const double theta2 = rng.uniform(0.0, std::numbers::pi);
      const double comp =
          (wigner_d(j, theta) * wigner_d(j, theta2) - wigner_d(j, theta + theta2))
              .cwiseAbs()
              .maxCoeff();
      report.add(make_record("wigner_composition", two_j, "-",
                             "draw=" + std::to_string(draw) + ";theta2=" + fmt_g15(theta2), comp,
                             1e-11));
    }
  }
}

void embedding_checks(const VerifyConfig& config, Rng64& rng, VerificationReport& report) {
  for (int two_j = 1; two_j <= std::min(8, config.max_two_j); ++two_j) {
    const TwiceJ j(two_j);
    const BlochVector a = rng.bloch();
    const BlochVector b = rng.bloch();
    const Eigen::MatrixXcd rot_a = spin_rotation(j, a);
    const Eigen::MatrixXcd rot_b = spin_rotation(j, b);

    std::vector<Eigen::VectorXcd> embedded_a(j.dim()), embedded_b(j.dim());
    for (int i = 0; i < j.dim(); ++i) {
      embedded_a[i] = embed_full_space(dicke_ket(j, j.m_at(i), a));
      embedded_b[i] = embed_full_space(dicke_ket(j, j.m_at(i), b));
    }

    double worst = 0.0;
    for (int r = 0; r < j.dim(); ++r)
      for (int c = 0; c < j.dim(); ++c) {
        const std::complex<double> full = embedded_a[r].dot(embedded_b[c]);
        const std::complex<double> spin = rot_a.col(r).dot(rot_b.col(c));
        worst = std::max(worst, std::abs(full - spin));
      }
    report.add(make_record("dicke_embedding", two_j, "-", "orientations=random", worst, 1e-12));
  }
}

void weight_identity_check(VerificationReport& report) {
  double failures = 0.0;
  for (int two_j = 2; two_j <= 40; ++two_j) {
    const TwiceJ j(two_j);
    for (int i = 0; i < j.dim(); ++i) {
      const HalfInt m = j.m_at(i);
      if (clone_overlap_weight(j, m) != Rational(two_j + m.twice, 2LL * two_j)) failures += 1.0;
    }
  }
  report.add(make_record("clone_weight_identity", 40, "-", "all 2j<=40;exact", failures, 0.0));
}

void family_checks(const VerifyConfig& config, VerificationReport& report) {
  for (int two_j = 2; two_j <= config.max_two_j; ++two_j) {
    const TwiceJ j(two_j);
    for (const Rational& t : config.t_grid) {
      const std::string t_str = t.str();
      const ExactProbDist exact = prob_vector_exact(j, t);

      report.add(make_record("parity_exact", two_j, t_str, "-",
                             parity_check_exact(exact).to_double(), 0.0));

      Rational sum(0);
      double negative = 0.0;
      for (int i = 0; i < exact.size(); ++i) {
        sum += exact[i];
        if (exact[i] < Rational(0)) negative += 1.0;
      }
      report.add(make_record("normalization_exact", two_j, t_str, "-",
                             (sum - Rational(1)).to_double(), 0.0));
      report.add(make_record("positivity_exact", two_j, t_str, "-", negative, 0.0));

      // p_{j,-j} vanishes exactly when t = 1 and only then.
      const bool vanishes = exact.at(j.min_m()).is_zero();
      const bool optimal = t == Rational(1);
      report.add(make_record("worst_weight_vanishes_iff_optimal", two_j, t_str, "-",
                             vanishes == optimal ? 0.0 : 1.0, 0.0));

      const Rational affine =
          fidelity_exact(j, t) + fidelity_exact(j, Rational(1) - t) - Rational(1);
      report.add(make_record("fidelity_affine_symmetry", two_j, t_str, "-",
                             affine.to_double(), 0.0));

      const Rational consistency = fidelity_from_probs_exact(exact) - fidelity_exact(j, t);
      report.add(make_record("fidelity_consistency_exact", two_j, t_str, "-",
                             consistency.to_double(), 0.0));

      const ClonerSpec spec(j, t.to_double());
      report.add(make_record("parity", two_j, t_str,
                             config.perturb != 0.0 ? "perturbed" : "-",
                             parity_check(perturbed_probs(spec, config.perturb)), 1e-12));
      report.add(make_record("fidelity_consistency", two_j, t_str, "-",
                             std::abs(fidelity_from_probs(prob_vector(spec)) - fidelity_of(spec)),
                             1e-14));
      report.add(make_record("fidelity_roundtrip", two_j, t_str, "-",
                             std::abs(t_from_fidelity(j, fidelity_of(spec)).t - spec.t), 1e-14));
    }
  }
}

void geometry_sweep(const VerifyConfig& config, Rng64& rng, VerificationReport& report,
                    int* rejected) {
  std::vector<int> spins;
  for (int two_j = 2; two_j <= config.max_two_j; ++two_j) spins.push_back(two_j);

  for (int draw = 0; draw < config.geometries; ++draw) {
    // Rejection sampling: the degeneracy count needs clear spectrum around
    // the target eigenvalue for every spin in the grid.
    MixtureGeometry geometry;
    for (;;) {
      const double theta = rng.uniform(0.1, std::numbers::pi - 0.1);
      const double theta_prime = rng.uniform(0.1, std::numbers::pi - 0.1);
      geometry = mixture_geometry(theta, theta_prime);
      const bool clear = std::ranges::all_of(spins, [&](int two_j) {
        return target_spectral_gap(TwiceJ(two_j), geometry, kDimGapTol) >= kRejectionGap;
      });
      if (clear) break;
      ++*rejected;
    }
    const std::string desc = geom_desc(draw, geometry);

    const double sin_sum = std::sin(geometry.theta) + std::sin(geometry.theta_prime);
    const double identities = std::max(
        {std::abs(geometry.mixing_weight - std::sin(geometry.theta_prime) / sin_sum),
         std::abs(geometry.z_weight - 0.5 * (1.0 + geometry.target_eigenvalue() / sin_sum)),
         std::abs(geometry.c_plus + geometry.c_minus - sin_sum),
         std::abs(geometry.c_plus - geometry.c_minus - geometry.target_eigenvalue())});
    report.add(make_record("geometry_identities", 0, "-", desc, identities, 1e-14));

    for (const int two_j : spins) {
      const TwiceJ j(two_j);
      const NsMatrix matrix = ns_matrix(j, geometry);

      const double row_sums =
          (matrix.entries.rowwise().sum() -
           Eigen::VectorXd::Constant(j.dim(), geometry.target_eigenvalue()))
              .cwiseAbs()
              .maxCoeff();
      report.add(make_record("ns_row_sums", two_j, "-", desc, row_sums, 1e-11));

      const int dim = solution_space_dim(j, geometry, kDimGapTol);
      report.add(make_record("solution_space_dim", two_j, "-", desc,
                             std::abs(dim - 2), 0.0));
      report.add(make_record("eigenspace_span", two_j, "-", desc,
                             eigenspace_span_loss(j, geometry, kDimGapTol), 1e-9));

      for (const Rational& t : config.t_grid) {
        const ClonerSpec spec(j, t.to_double());
        const ProbDist p = perturbed_probs(spec, config.perturb);
        report.add(make_record("eigen_residual", two_j, t.str(), desc,
                               eigen_residual(p, geometry), config.tol));
        report.add(make_record("convex_equality", two_j, t.str(), desc,
                               convex_equality_check(spec, geometry), config.tol));
      }
    }
  }
}

void linear_identity_checks(const VerifyConfig& config, Rng64& rng, VerificationReport& report) {
  for (int draw = 0; draw < 100; ++draw) {
    const int two_j = 1 + static_cast<int>(rng.uniform() * std::min(20, 2 * config.max_two_j));
    const double theta = rng.uniform(0.0, std::numbers::pi);
    const double slope = rng.uniform(-5.0, 5.0);
    const double offset = rng.uniform(-5.0, 5.0);
    report.add(make_record(
        "linear_identity", two_j, "-",
        "draw=" + std::to_string(draw) + ";theta=" + fmt_g15(theta) + ";a=" + fmt_g15(slope) +
            ";b=" + fmt_g15(offset),
        linear_identity_check(TwiceJ(two_j), theta, slope, offset), 1e-11));
  }
}

void channel_checks(const VerifyConfig& config, Rng64& rng, VerificationReport& report) {
  const int max_two_j = std::min(8, config.max_two_j);

  for (int two_j = 2; two_j <= max_two_j; ++two_j) {
    const TwiceJ j(two_j);
    for (const Rational& t : config.t_grid) {
      const ClonerSpec spec(j, t.to_double());

      double lo = 1.0, hi = 0.0;
      for (int s = 0; s < config.bloch_samples; ++s) {
        const BlochVector n = rng.bloch();
        const Eigen::Vector2cd ket = n.ket();
        const QubitDensity out = single_clone(spec, n.projector());
        const double overlap = (ket.adjoint() * out * ket)(0).real();
        lo = std::min(lo, overlap);
        hi = std::max(hi, overlap);
      }
      report.add(make_record("universality_spread", two_j, t.str(),
                             "samples=" + std::to_string(config.bloch_samples), hi - lo, 1e-12));

      const BlochVector n = rng.bloch();
      const SpinDensity plus = apply_pure(spec, n);
      const SpinDensity minus = apply_pure(spec, n.antipode());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(plus.mat + minus.mat,
                                                             Eigen::EigenvaluesOnly);
      const double antipodal =
          (solver.eigenvalues() - Eigen::VectorXd::Constant(j.dim(), 2.0 / j.dim()))
              .cwiseAbs()
              .maxCoeff();
      report.add(make_record("antipodal_sum", two_j, t.str(), "-", antipodal, 1e-11));

      const SchmidtOutput schmidt = schmidt_output(spec, n);
      const double schmidt_residual =
          (trace_out_machine(schmidt) - apply_pure(spec, n).mat).cwiseAbs().maxCoeff();
      report.add(make_record("schmidt_trace", two_j, t.str(), "-", schmidt_residual, 1e-12));

      const double machine_ortho =
          (schmidt.machine_basis.adjoint() * schmidt.machine_basis -
           Eigen::MatrixXcd::Identity(j.dim(), j.dim()))
              .cwiseAbs()
              .maxCoeff();
      report.add(make_record("machine_orthonormality", two_j, t.str(), "-", machine_ortho, 1e-12));
    }
  }

  // Convex linearity of the mixed-state extension (the no-signaling
  // requirement restated for the implemented map).
  for (int draw = 0; draw < 20; ++draw) {
    const int two_j = 2 + static_cast<int>(rng.uniform() * (max_two_j - 1));
    const TwiceJ j(two_j);
    const ClonerSpec spec(j, rng.uniform());
    const auto mixed = [&rng]() -> QubitDensity {
      const double w = rng.uniform();
      return w * rng.bloch().projector() + (1.0 - w) * rng.bloch().projector();
    };
    const QubitDensity rho1 = mixed();
    const QubitDensity rho2 = mixed();
    const double weight = rng.uniform();
    const QubitDensity combined = weight * rho1 + (1.0 - weight) * rho2;
    const double residual = (apply_mixed(spec, combined).mat -
                             weight * apply_mixed(spec, rho1).mat -
                             (1.0 - weight) * apply_mixed(spec, rho2).mat)
                                .cwiseAbs()
                                .maxCoeff();
    report.add(make_record("convex_linearity", two_j, fmt_g15(spec.t),
                           "draw=" + std::to_string(draw), residual, 1e-10));
  }

  for (int two_j = 2; two_j <= std::min(4, config.max_two_j); ++two_j) {
    const TwiceJ j(two_j);
    for (const Rational& t : config.t_grid) {
      const ClonerSpec spec(j, t.to_double());
      const BlochVector n = rng.bloch();
      const double residual =
          (brute_force_single_clone(spec, n) - single_clone(spec, n.projector()))
              .cwiseAbs()
              .maxCoeff();
      report.add(make_record("oracle_equivalence", two_j, t.str(), "-", residual, 1e-12));
    }
  }
}

void composition_checks(const VerifyConfig& config, Rng64& rng, VerificationReport& report) {
  const int max_two_j = std::min(8, config.max_two_j);

  for (int draw = 0; draw < 25; ++draw) {
    const int n_stages = 1 + static_cast<int>(rng.uniform() * 4.0);
    std::vector<ClonerSpec> stages;
    double folded = 1.0;
    for (int s = 0; s < n_stages; ++s) {
      const int two_j = 2 + static_cast<int>(rng.uniform() * (max_two_j - 1));
      stages.emplace_back(TwiceJ(two_j), rng.uniform());
      folded = compose_predict(folded, fidelity_of(stages.back()));
    }
    const Pipeline pipeline(stages);
    const double simulated = sequential_simulate(pipeline, rng.bloch());
    report.add(make_record("fold_consistency", 0, "-",
                           "draw=" + std::to_string(draw) + ";stages=" + std::to_string(n_stages),
                           std::abs(simulated - folded), 1e-12));
  }

  {
    const Pipeline pipeline({make_named(ClonerKind::prime, TwiceJ(2)),
                             make_named(ClonerKind::optimal, TwiceJ(3)),
                             make_named(ClonerKind::uniform, TwiceJ(2))});
    double lo = 1.0, hi = 0.0;
    for (int s = 0; s < 50; ++s) {
      const double overlap = sequential_simulate(pipeline, rng.bloch());
      lo = std::min(lo, overlap);
      hi = std::max(hi, overlap);
    }
    report.add(make_record("composition_input_independence", 0, "-", "samples=50", hi - lo,
                           1e-12));
  }

  for (int m = 2; m <= 6; ++m)
    for (int n = m; n <= 6; ++n) {
      report.add(make_record("prime_law_exact", m * n, "-",
                             "M=" + std::to_string(m) + ";N=" + std::to_string(n),
                             prime_multiplicativity_exact(m, n).to_double(), 0.0));
      report.add(make_record("prime_law_simulated", m * n, "-",
                             "M=" + std::to_string(m) + ";N=" + std::to_string(n),
                             prime_multiplicativity_check(m, n), 1e-12));
    }

  {
    double failures = 0.0;
    for (const auto& [j, fidelity] : prime_limit_scan(TwiceJ(1000)))
      if (fidelity - Rational(1, 2) != Rational(1, 2LL * j.two_j)) failures += 1.0;
    report.add(make_record("prime_limit_exact", 1000, "-", "2j<=1000;exact", failures, 0.0));
  }

  {
    // optimal o optimal at M = N = 2 composes to 13/18, not the direct
    // 1-to-4 optimal fidelity 3/4; the simulation must land on 13/18.
    const Pipeline pipeline({make_named(ClonerKind::optimal, TwiceJ(2)),
                             make_named(ClonerKind::optimal, TwiceJ(2))});
    const double simulated = sequential_simulate(pipeline, rng.bloch());
    report.add(make_record("composition_negative_control", 2, "1", "optimal;M=N=2",
                           std::abs(simulated - 13.0 / 18.0), 1e-12));
  }
}

}  // namespace

VerificationReport run_verification(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  Rng64 rng(config.seed);
  int rejected = 0;

  wigner_checks(config, rng, report);
  embedding_checks(config, rng, report);
  weight_identity_check(report);
  family_checks(config, report);
  geometry_sweep(config, rng, report, &rejected);
  linear_identity_checks(config, rng, report);
  channel_checks(config, rng, report);
  composition_checks(config, rng, report);

  std::string t_grid;
  for (const Rational& t : config.t_grid) t_grid += (t_grid.empty() ? "" : " ") + t.str();
  report.meta = {{"tool", "nscloner"},
                 {"version", kVersion},
                 {"max_two_j", std::to_string(config.max_two_j)},
                 {"t_grid", t_grid},
                 {"geometries", std::to_string(config.geometries)},
                 {"bloch_samples", std::to_string(config.bloch_samples)},
                 {"seed", std::to_string(config.seed)},
                 {"tol", fmt_g15(config.tol)},
                 {"perturb", fmt_g15(config.perturb)},
                 {"rejected_geometries", std::to_string(rejected)}};

  report.finalize();
  report.summary.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nscloner
