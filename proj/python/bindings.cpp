// Python bindings for the main operations: exact diagonalization, the
// integral-equation solver, thermodynamic closed forms, and the correlator
// table assembly.
#include "irf6v/density_correlators.hpp"
#include "irf6v/exact_diag.hpp"
#include "irf6v/nlie_solver.hpp"
#include "irf6v/omega.hpp"
#include "irf6v/table_runner.hpp"
#include "irf6v/thermo_limit.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace irf6v;

namespace {

std::vector<cplx> u_or_zero(int L, const std::optional<std::vector<cplx>>& u) {
  if (!u) return std::vector<cplx>(L, 0.0);
  return *u;
}

AuxSolution make_aux(int L, double x_max, int n_points, double tol, int max_iter) {
  RapidityGrid grid(x_max, n_points);
  return solve_aux(L, grid, tol, max_iter);
}

py::dict jet_to_dict(const JetOrders& jet) {
  py::dict out;
  for (auto& [mn, v] : jet) out[py::make_tuple(mn.first, mn.second)] = v;
  return out;
}

} // namespace

PYBIND11_MODULE(_irf6v, m) {
  m.doc() =
      "Ground-state short-distance correlators of the face version of the "
      "isotropic six-vertex model and its three-spin chain";

  // face model
  m.def("face_weight", &face_weight, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("d"), py::arg("lam"),
        "Boltzmann weight of one face; corners (a,b,c,d) = (SW,SE,NE,NW), +-1.");
  m.def("yang_baxter_residual", &yang_baxter_residual, py::arg("lam"), py::arg("mu"));
  m.def(
      "transfer_matrix",
      [](int L, cplx lam, std::optional<std::vector<cplx>> u) {
        return transfer_matrix(L, lam, u_or_zero(L, u)).matrix;
      },
      py::arg("L"), py::arg("lam"), py::arg("u") = py::none());
  m.def(
      "hamiltonian", [](int L) { return hamiltonian_irf(L).matrix; }, py::arg("L"),
      "Dense three-spin Hamiltonian, periodic, L <= 12.");

  // exact diagonalization
  m.def("ed_correlators", &ed_correlators, py::arg("L"),
        "All eight named ground-state correlators at even L <= 14.");
  m.def(
      "omega_from_ed",
      [](int L, cplx l1, cplx l2, std::optional<std::vector<cplx>> u) {
        return omega_from_ed(L, l1, l2, u_or_zero(L, u));
      },
      py::arg("L"), py::arg("l1"), py::arg("l2"), py::arg("u") = py::none());
  m.def(
      "verify_qkz",
      [](int L, int n, std::vector<cplx> lams, std::vector<cplx> u) {
        return verify_qkz(L, n, lams, u);
      },
      py::arg("L"), py::arg("n"), py::arg("lambdas"), py::arg("u"),
      "Max-norm residual of the discrete qKZ functional equation.");
  m.def("draw_inhomogeneities", &draw_inhomogeneities, py::arg("L"), py::arg("seed"));

  // integral equations
  m.def(
      "nlie_correlators",
      [](int L, double x_max, int n_points, double tol, int max_iter) {
        AuxSolution aux = make_aux(L, x_max, n_points, tol, max_iter);
        return correlators_from_jet(omega_jet(aux).values, L).entries;
      },
      py::arg("L"), py::arg("x_max") = 25.0, py::arg("n_points") = 4096,
      py::arg("tol") = 1e-13, py::arg("max_iter") = 5000,
      "Correlator row at finite L (L >= 8, L = 0 mod 4) from the integral equations.");
  m.def(
      "omega_nlie",
      [](int L, cplx l1, cplx l2, double x_max, int n_points, double tol, int max_iter) {
        AuxSolution aux = make_aux(L, x_max, n_points, tol, max_iter);
        return omega_value(aux, l1, l2);
      },
      py::arg("L"), py::arg("l1"), py::arg("l2"), py::arg("x_max") = 25.0,
      py::arg("n_points") = 4096, py::arg("tol") = 1e-13, py::arg("max_iter") = 5000);
  m.def(
      "omega_jet_nlie",
      [](int L, double x_max, int n_points, double tol, int max_iter) {
        AuxSolution aux = make_aux(L, x_max, n_points, tol, max_iter);
        return jet_to_dict(omega_jet(aux).values);
      },
      py::arg("L"), py::arg("x_max") = 25.0, py::arg("n_points") = 4096,
      py::arg("tol") = 1e-13, py::arg("max_iter") = 5000,
      "Derivative jet omega^(m,n) at the homogeneous point.");
  m.def("kernel_F", &kernel_F, py::arg("x"));
  m.def("kernel_K", &kernel_K, py::arg("x"));

  // thermodynamic limit
  m.def("omega_inf", &omega_inf, py::arg("lam"));
  m.def("thermo_jet", [] { return jet_to_dict(thermo_jet()); });
  m.def("thermo_correlators", [] { return thermo_table().entries; });
  m.def("zeta_constants", [] {
    auto z = zeta_constants();
    return py::make_tuple(z.ln2, z.zeta3, z.zeta5);
  });

  // correlator assembly from an explicit jet
  m.def(
      "correlators_from_jet",
      [](const std::map<std::pair<int, int>, double>& jet, long length) {
        return correlators_from_jet(jet, length).entries;
      },
      py::arg("jet"), py::arg("length"));
}
