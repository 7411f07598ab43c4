#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rsvd/algebra.hpp"
#include "rsvd/campaign.hpp"
#include "rsvd/dynamics.hpp"
#include "rsvd/lax.hpp"
#include "rsvd/poisson.hpp"
#include "rsvd/rmatrix.hpp"
#include "rsvd/reduction.hpp"
#include "rsvd/tensor.hpp"

namespace py = pybind11;
using namespace rsvd;

namespace {

PhasePoint make_point(const RVector& lambda, const RVector& theta) {
  PhasePoint p;
  p.lambda = lambda;
  p.theta = theta;
  p.validate();
  return p;
}

LaxVariant variant_from_name(const std::string& name) {
  if (name == "plain") return LaxVariant::Plain;
  if (name == "tilde") return LaxVariant::Tilde;
  if (name == "hat") return LaxVariant::Hat;
  if (name == "check") return LaxVariant::Check;
  throw ConfigError("unknown variant '" + name + "' (plain|tilde|hat|check)");
}

Family family_from_name(const std::string& name) {
  if (name == "plain") return Family::Plain;
  if (name == "tilde") return Family::Tilde;
  if (name == "hat") return Family::Hat;
  throw ConfigError("unknown family '" + name + "' (plain|tilde|hat)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lax matrices, dynamical r-matrix structure and flows of a "
            "rational multi-particle integrable system";

  py::register_exception<Error>(m, "WorkbenchError");

  py::class_<Couplings>(m, "Couplings")
      .def(py::init([](double mu, double nu, double kappa) {
             Couplings c{mu, nu, kappa};
             c.validate();
             return c;
           }),
           py::arg("mu"), py::arg("nu"), py::arg("kappa") = 0.0)
      .def_readonly("mu", &Couplings::mu)
      .def_readonly("nu", &Couplings::nu)
      .def_readonly("kappa", &Couplings::kappa);

  py::class_<PhasePoint>(m, "PhasePoint")
      .def(py::init(&make_point), py::arg("lambda_"), py::arg("theta"))
      .def_readonly("lambda_", &PhasePoint::lambda)
      .def_readonly("theta", &PhasePoint::theta)
      .def_property_readonly("n", &PhasePoint::n);

  // Lax matrices and friends.
  m.def("z_values", &z_values, py::arg("point"), py::arg("couplings"));
  m.def("f_vector", &f_vector, py::arg("point"), py::arg("couplings"));
  m.def(
      "lax_matrix",
      [](const PhasePoint& p, const Couplings& c, const std::string& variant) {
        return lax_variant(p, c, variant_from_name(variant));
      },
      py::arg("point"), py::arg("couplings"), py::arg("variant") = "plain");
  m.def("v_vector", &v_vector, py::arg("point"), py::arg("couplings"));
  m.def("hamiltonian", &hamiltonian, py::arg("point"), py::arg("couplings"));
  m.def("h_matrix", &h_matrix, py::arg("lambda_"), py::arg("kappa"));
  m.def("big_h", &big_h, py::arg("lambda_"), py::arg("kappa"));

  // Quadratic structure.
  m.def(
      "quad_coefficients",
      [](const PhasePoint& p, const Couplings& c, const std::string& family) {
        QuadCoefficients q;
        switch (family_from_name(family)) {
          case Family::Plain:
            q = quad_plain(p, c);
            break;
          case Family::Tilde:
            q = quad_tilde(p, c);
            break;
          case Family::Hat:
            q = quad_hat(p, c);
            break;
        }
        return py::make_tuple(q.a, q.b, q.c, q.d);
      },
      py::arg("point"), py::arg("couplings"), py::arg("family") = "plain",
      "Coefficients (a, b, c, d) of the quadratic bracket of the given family");
  m.def(
      "consistency_residuals",
      [](const PhasePoint& p, const Couplings& c, const std::string& family) {
        QuadCoefficients q;
        switch (family_from_name(family)) {
          case Family::Plain:
            q = quad_plain(p, c);
            break;
          case Family::Tilde:
            q = quad_tilde(p, c);
            break;
          case Family::Hat:
            q = quad_hat(p, c);
            break;
        }
        const auto res = consistency_residuals(q);
        return std::vector<double>(res.begin(), res.end());
      },
      py::arg("point"), py::arg("couplings"), py::arg("family") = "plain");
  m.def(
      "theorem_residual",
      [](const PhasePoint& p, const Couplings& c, const std::string& family) {
        return verify_theorem(p, c, family_from_name(family)).residual;
      },
      py::arg("point"), py::arg("couplings"), py::arg("family") = "plain",
      "Relative residual of the quadratic bracket against finite differences");
  m.def("lax_pair_b", &lax_pair_b, py::arg("point"), py::arg("couplings"));
  m.def(
      "lax_equation_residual",
      [](const PhasePoint& p, const Couplings& c) {
        return verify_lax_equation(p, c).residual;
      },
      py::arg("point"), py::arg("couplings"));

  // Flows.
  m.def("bracket_sign", &bracket_sign);
  m.def(
      "integrate",
      [](const PhasePoint& p, const Couplings& c, double t_end, double dt) {
        const Trajectory traj = integrate(p, c, t_end, dt);
        const int n = p.n();
        const auto steps = static_cast<long>(traj.states.size());
        RVector times(steps);
        Eigen::MatrixXd lambdas(steps, n), thetas(steps, n);
        RVector energies(steps);
        for (long i = 0; i < steps; ++i) {
          times(i) = traj.times[static_cast<size_t>(i)];
          const PhasePoint& s = traj.states[static_cast<size_t>(i)];
          lambdas.row(i) = s.lambda;
          thetas.row(i) = s.theta;
          energies(i) = hamiltonian(s, c);
        }
        return py::make_tuple(times, lambdas, thetas, energies);
      },
      py::arg("point"), py::arg("couplings"), py::arg("t_end"), py::arg("dt") = 1e-3,
      "RK4 trajectory; returns (times, lambdas, thetas, energies)");
  m.def(
      "spectral_drift",
      [](const PhasePoint& p, const Couplings& c, double t_end, double dt,
         const std::string& variant) {
        return spectral_drift(integrate(p, c, t_end, dt), variant_from_name(variant));
      },
      py::arg("point"), py::arg("couplings"), py::arg("t_end"), py::arg("dt") = 1e-3,
      py::arg("variant") = "hat");

  // Reduction picture.
  m.def(
      "momentum_residuals",
      [](const PhasePoint& p, const Couplings& c) {
        const ExtendedPoint e = upsilon(p, c);
        const auto [J1, J2] = momentum_map(e);
        const double scale = 1.0 + lax_a(p, c).norm();
        return py::make_tuple(J1.norm() / scale, J2.norm() / scale);
      },
      py::arg("point"), py::arg("couplings"),
      "Scaled norms of the two momentum-map components at the canonical lift");

  m.def("calibrate", []() {
    const CalibrationResult r = calibrate_sign();
    py::dict d;
    d["sign"] = r.sign;
    d["residual_plus"] = r.residual_plus;
    d["residual_minus"] = r.residual_minus;
    return d;
  });
}
