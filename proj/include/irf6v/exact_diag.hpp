#ifndef IRF6V_EXACT_DIAG_HPP
#define IRF6V_EXACT_DIAG_HPP

#include "irf6v/face_model.hpp"

#include <map>
#include <string>
#include <vector>

namespace irf6v {

// Transfer-matrix ground state. For the homogeneous chain this is the
// minimum-energy eigenvector of hamiltonian_irf (left = right). With
// inhomogeneities the transfer matrix is not symmetric and the left and
// right eigenvectors of the leading eigenvalue differ; both are kept and
// all pairings are bilinear (no conjugation).
class GroundState {
 public:
  GroundState(int L, std::vector<cplx> u, Vector left, Vector right);

  int length() const { return L_; }
  const std::vector<cplx>& inhomogeneities() const { return u_; }
  const Vector& left() const { return left_; }
  const Vector& right() const { return right_; }
  cplx norm() const { return norm_; }

  // Lambda_0(lambda) of this eigenstate, cached per spectral point.
  cplx eigenvalue(cplx lambda) const;

  // ||T(lambda) phi_R - Lambda phi_R|| / ||T phi_R||, for invariant tests.
  double eigen_residual(cplx lambda) const;

 private:
  int L_;
  std::vector<cplx> u_;
  Vector left_, right_;
  cplx norm_;
  mutable std::map<std::pair<double, double>, cplx> cache_;
};

// Homogeneous ground state via Lanczos on the Hamiltonian (L <= 14).
// Fails if the two lowest levels are degenerate within 1e-10.
GroundState ground_state(int L);

// Inhomogeneous ground state from the dense transfer matrix at
// lambda = -1/2 (leading modulus eigenvalue); L <= 10.
GroundState ground_state(int L, const std::vector<cplx>& u);

// Largest-modulus eigenpair by shifted power iteration. Deterministic sign
// convention: first nonzero component of the eigenvector is real positive.
// Throws on non-convergence, reporting the iteration history.
std::pair<cplx, Vector> leading_eigenpair(const Matrix& T, double tol = 1e-13,
                                          int max_iter = 20000);

struct DensityMatrix {
  Matrix matrix;                      // dim 2^{n+1} (IRF) or 2^{n-1} (chain)
  int sites = 0;                      // n
  std::string basis_tag;              // "height-lex" or "chain-height-lex"
  std::vector<cplx> spectral_points;  // the lambdas used
};

// Inhomogeneous reduced density matrix D_n, Eq.-level contract:
// D^{a_1..a_{n+1}}_{b_1..b_{n+1}} = <phi_L| prod_k T^{a_k b_k}_{a_{k+1} b_{k+1}}(lambda_k) |phi_R>
//   / (<phi_L|phi_R> prod_k Lambda_0(lambda_k)),
// supported on a_1 = b_1 and a_{n+1} = b_{n+1} (the outer boundary heights
// of the strip are shared with the periodic environment). Trace = 1.
DensityMatrix reduced_density_irf(const GroundState& gs,
                                  const std::vector<cplx>& lambdas, int n);

// The linear operator A_n of the discrete qKZ equation applied to D.
// Throws if any (lambda_k - lambda_n)^2 = 1 (singular prefactor).
DensityMatrix apply_qkz_operator(const DensityMatrix& D, const std::vector<cplx>& lambdas);

// || D_n(..., lambda_n - 1) - A_n[D_n(..., lambda_n)] ||_max ;
// requires lambda_n to equal one of the inhomogeneities.
double verify_qkz(int L, int n, const std::vector<cplx>& lambdas,
                  const std::vector<cplx>& u);

// Chain density matrix: trace over the shared boundary heights,
// D_{n-1}[a_2..a_n; b_2..b_n] = sum_{a_1, a_{n+1}} D[a_1 a_2.. a_{n+1}; a_1 b_2.. a_{n+1}].
DensityMatrix partial_trace_to_chain(const DensityMatrix& D);

// Basis permutation realizing the direct-sum ordering: new index
// (block=a_1, spins s_i = a_1*a_i*a_{i+1} in lex order) -> height-lex index.
std::vector<long> direct_sum_permutation(int n);

// XXX block of an IRF density matrix: reorders, checks that the matrix is
// block-diagonal with two equal blocks (tolerance), returns 2 * top block.
// Throws on structure violation.
Matrix xxx_block(const DensityMatrix& D, double tol = 1e-8);

// omega(lambda1, lambda2) = 3 * (permutation entry) of the XXX block of the
// two-site matrix. Structure violations beyond 1e-8 throw.
cplx omega_from_ed(int L, cplx lambda1, cplx lambda2, const std::vector<cplx>& u);

// Ground-state expectation value of a named Pauli string for the
// homogeneous chain. Names: x1, x1x2, x1x2x3, x1x3, y1y3, z1z3, yxy, zxz.
double correlator_ed(int L, const std::string& name);

// All eight named correlators in one ground-state computation.
std::map<std::string, double> ed_correlators(int L);

// Deterministic inhomogeneity draw: |u_i| <= 0.25, pairwise separated.
std::vector<cplx> draw_inhomogeneities(int L, unsigned long long seed);

} // namespace irf6v

#endif
