"""Smoke test for the python bindings: wiring, shapes, and a few values."""
import math
import sys

import numpy as np

import _irf6v as irf


def approx(a, b, tol):
    assert abs(a - b) < tol, f"{a} vs {b} (tol {tol})"


def main():
    # face weights and the Yang-Baxter identity
    approx(irf.face_weight(1, 1, 1, 1, 0.5), 1.5, 1e-15)
    approx(irf.face_weight(1, 1, -1, -1, 0.0), 0.0, 1e-15)
    approx(irf.face_weight(1, 1, 1, -1, 2.3), 1.0, 1e-15)
    assert irf.yang_baxter_residual(0.37, -0.12) < 1e-13

    # operators come back as numpy arrays with the expected structure
    H = irf.hamiltonian(4)
    assert H.shape == (16, 16)
    assert np.max(np.abs(H - H.conj().T)) == 0.0
    T1 = irf.transfer_matrix(4, 0.2)
    T2 = irf.transfer_matrix(4, -0.4)
    assert np.max(np.abs(T1 @ T2 - T2 @ T1)) < 1e-12

    # exact diagonalization row at L=4
    ed = irf.ed_correlators(4)
    approx(ed["x1"], -2.0 / 3.0, 1e-10)
    approx(ed["x1x3"], 1.0, 1e-10)
    approx(irf.omega_from_ed(4, 0, 0).real, -1.0, 1e-9)

    # qKZ residual with seeded inhomogeneities
    u = irf.draw_inhomogeneities(4, 1)
    assert irf.verify_qkz(4, 2, [0.3, u[1]], u) < 1e-10

    # closed forms
    ln2, z3, z5 = irf.zeta_constants()
    approx(ln2, math.log(2.0), 1e-15)
    approx(z3, 1.2020569031595943, 1e-14)
    thermo = irf.thermo_correlators()
    approx(thermo["x1"], -0.590862907413, 1e-10)
    approx(irf.omega_inf(0).real, 0.5 - 2 * math.log(2.0), 1e-13)

    # one finite-size integral-equation run
    row = irf.nlie_correlators(16)
    approx(row["x1"], -0.59519136, 2e-7)
    approx(row["y1y3"], 0.17583391, 2e-7)
    jet = irf.omega_jet_nlie(16)
    approx(irf.correlators_from_jet(jet, 16)["x1"], row["x1"], 1e-12)

    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
