#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nscloner/channel.hpp"
#include "nscloner/cloner_family.hpp"
#include "nscloner/composition.hpp"
#include "nscloner/ns_verifier.hpp"
#include "nscloner/pseudospin.hpp"
#include "nscloner/report.hpp"
#include "nscloner/verify.hpp"

namespace py = pybind11;
using namespace nscloner;

namespace {

TwiceJ as_j(int two_j) { return TwiceJ(two_j); }
HalfInt as_m(int twice_m) { return HalfInt::from_twice(twice_m); }

std::vector<double> prob_values(const ProbDist& p) { return p.values(); }

ClonerKind kind_of(const std::string& name) { return cloner_kind_from_string(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "universal symmetric 1-to-M qubit cloners from no-signaling constraints";

  py::register_exception<SpectralGapError>(m, "SpectralGapError");

  py::class_<BlochVector>(m, "BlochVector")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi") = 0.0)
      .def_readonly("theta", &BlochVector::theta)
      .def_readonly("phi", &BlochVector::phi)
      .def("unit3", &BlochVector::unit3)
      .def("antipode", &BlochVector::antipode)
      .def("ket", &BlochVector::ket)
      .def("projector", &BlochVector::projector);

  py::class_<ClonerSpec>(m, "ClonerSpec")
      .def(py::init([](int two_j, double t) { return ClonerSpec(as_j(two_j), t); }),
           py::arg("two_j"), py::arg("t"))
      .def_property_readonly("two_j", [](const ClonerSpec& s) { return s.j.two_j; })
      .def_readonly("t", &ClonerSpec::t);

  py::class_<MixtureGeometry>(m, "MixtureGeometry")
      .def_readonly("theta", &MixtureGeometry::theta)
      .def_readonly("theta_prime", &MixtureGeometry::theta_prime)
      .def_readonly("mixing_weight", &MixtureGeometry::mixing_weight)
      .def_readonly("z_weight", &MixtureGeometry::z_weight)
      .def_readonly("c_plus", &MixtureGeometry::c_plus)
      .def_readonly("c_minus", &MixtureGeometry::c_minus)
      .def("target_eigenvalue", &MixtureGeometry::target_eigenvalue);

  // pseudospin
  m.def("wigner_d", [](int two_j, double theta) { return wigner_d(as_j(two_j), theta); },
        py::arg("two_j"), py::arg("theta"),
        "Reduced rotation matrix d(theta) = exp(-i theta Jy), descending m.");
  m.def("spin_rotation",
        [](int two_j, const BlochVector& n) { return spin_rotation(as_j(two_j), n); });
  m.def("dicke_ket",
        [](int two_j, int twice_m, const BlochVector& n) {
          return dicke_ket(as_j(two_j), as_m(twice_m), n).coeffs;
        },
        py::arg("two_j"), py::arg("twice_m"), py::arg("axis"));
  m.def("embed_full_space", [](int two_j, int twice_m, const BlochVector& n) {
    return embed_full_space(dicke_ket(as_j(two_j), as_m(twice_m), n));
  });
  m.def("clone_overlap_weight", [](int two_j, int twice_m) {
    return clone_overlap_weight(as_j(two_j), as_m(twice_m)).to_double();
  });

  // cloner family
  m.def("prob_vector",
        [](const ClonerSpec& spec) { return prob_values(prob_vector(spec)); },
        "Coefficients p_{jm}, descending m (index 0 is m = +j).");
  m.def("fidelity_of", &fidelity_of);
  m.def("fidelity_from_probs", [](int two_j, const std::vector<double>& p) {
    return fidelity_from_probs(ProbDist(as_j(two_j), p));
  });
  m.def("t_from_fidelity",
        [](int two_j, double fidelity) { return t_from_fidelity(as_j(two_j), fidelity); });
  m.def("make_named",
        [](const std::string& kind, int two_j) { return make_named(kind_of(kind), as_j(two_j)); },
        py::arg("kind"), py::arg("two_j"));
  m.def("allowed_interval", [](int two_j) {
    const FidelityInterval interval = allowed_interval(as_j(two_j));
    return std::make_pair(interval.lo, interval.hi);
  });
  m.def("prime_fidelity", [](int two_j) { return prime_fidelity_exact(as_j(two_j)).to_double(); });

  // channel
  m.def("apply_pure",
        [](const ClonerSpec& spec, const BlochVector& n) { return apply_pure(spec, n).mat; });
  m.def("apply_mixed", [](const ClonerSpec& spec, const Eigen::Matrix2cd& rho) {
    return apply_mixed(spec, rho).mat;
  });
  m.def("single_clone", [](const ClonerSpec& spec, const Eigen::Matrix2cd& rho) {
    return single_clone(spec, rho);
  });
  m.def("schmidt_amplitudes", [](const ClonerSpec& spec, const BlochVector& n) {
    return schmidt_output(spec, n).amplitudes;
  });
  m.def("brute_force_single_clone",
        [](const ClonerSpec& spec, const BlochVector& n) {
          return brute_force_single_clone(spec, n);
        });

  // no-signaling verifier
  m.def("mixture_geometry", &mixture_geometry, py::arg("theta"), py::arg("theta_prime"));
  m.def("ns_matrix",
        [](int two_j, const MixtureGeometry& g) { return ns_matrix(as_j(two_j), g).entries; });
  m.def("eigen_residual", [](int two_j, const std::vector<double>& p, const MixtureGeometry& g) {
    return eigen_residual(ProbDist(as_j(two_j), p), g);
  });
  m.def("solution_space_dim",
        [](int two_j, const MixtureGeometry& g, double gap_tol) {
          return solution_space_dim(as_j(two_j), g, gap_tol);
        },
        py::arg("two_j"), py::arg("geometry"), py::arg("gap_tol") = 1e-8);
  m.def("linear_identity_check", [](int two_j, double theta, double a, double b) {
    return linear_identity_check(as_j(two_j), theta, a, b);
  });
  m.def("parity_check", [](int two_j, const std::vector<double>& p) {
    return parity_check(ProbDist(as_j(two_j), p));
  });
  m.def("convex_equality_check", [](const ClonerSpec& spec, const MixtureGeometry& g) {
    return convex_equality_check(spec, g);
  });

  // composition
  m.def("compose_predict", py::overload_cast<double, double>(&compose_predict));
  m.def("sequential_simulate", [](const std::vector<ClonerSpec>& stages, const BlochVector& n) {
    return sequential_simulate(Pipeline(stages), n);
  });
  m.def("prime_multiplicativity_check", &prime_multiplicativity_check);

  // verification sweep
  m.def("run_verification",
        [](int max_two_j, int geometries, int bloch_samples, std::uint64_t seed, double tol,
           double perturb) {
          VerifyConfig config;
          config.max_two_j = max_two_j;
          config.geometries = geometries;
          config.bloch_samples = bloch_samples;
          config.seed = seed;
          config.tol = tol;
          config.perturb = perturb;
          const VerificationReport report = run_verification(config);
          py::dict summary;
          summary["total"] = report.summary.total;
          summary["passed"] = report.summary.passed;
          summary["max_residual"] = report.summary.max_residual;
          summary["all_passed"] = report.all_passed();
          return summary;
        },
        py::arg("max_two_j") = 6, py::arg("geometries") = 10, py::arg("bloch_samples") = 25,
        py::arg("seed") = 20250808, py::arg("tol") = 1e-10, py::arg("perturb") = 0.0);
}
