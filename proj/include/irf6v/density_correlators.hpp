#ifndef IRF6V_DENSITY_CORRELATORS_HPP
#define IRF6V_DENSITY_CORRELATORS_HPP

#include "irf6v/face_model.hpp"
#include "irf6v/thermo_limit.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>

namespace irf6v {

// omega(lambda_i, lambda_j) evaluator plus its homogeneous jet; the two must
// be consistent (checked by tests through finite differences).
struct OmegaProvider {
  std::function<cplx(cplx, cplx)> evaluate;
  JetOrders jet;
};

// D2_XXX = (1/4 - w/6) I4 + (w/3) P12.
Matrix d2_xxx(cplx omega12);

// Permutation operator P_{ij} on n qubits (0-based sites), 2^n x 2^n.
Matrix permutation_op(int n, int i, int j);

// rho^(3) coefficients of D3_XXX over {I, P12, P23, P12 P23, P23 P12}.
// The source table's first omega bracket of rho5 cancels identically to
// (1/l23 - 1/l13); trace normalization and the L=8 block equivalence force
// (2+l12)/(l13 l23), which is what the default computes.
enum class Rho5Bracket { trace_consistent, cancelling };
std::array<cplx, 5> rho3_coefficients(cplx w12, cplx w13, cplx w23,
                                      cplx l1, cplx l2, cplx l3,
                                      Rho5Bracket variant = Rho5Bracket::trace_consistent);

// Three-site XXX density matrix from the factorized coefficients;
// lambdas must be pairwise distinct.
Matrix d3_xxx(const OmegaProvider& omega, cplx l1, cplx l2, cplx l3);

// Omega^{(3)}: generic branch for pairwise-distinct lambdas, homogeneous
// branch (from the jet) when all three coincide; partially coincident
// arguments are rejected.
cplx omega3_fn(const OmegaProvider& omega, cplx l1, cplx l2, cplx l3);

// rho^(4)_k for k = 9..14 from the tabulated A_i^{(k)}, B_i^{(k)}.
cplx rho4_coefficient(int k, const OmegaProvider& omega,
                      cplx l1, cplx l2, cplx l3, cplx l4);

// (Omega1, Omega2, Omega3, Omega4); generic branch needs pairwise-distinct
// lambdas, the all-zero point routes to the homogeneous-limit formulas.
std::array<cplx, 4> omega4_fns(const OmegaProvider& omega,
                               cplx l1, cplx l2, cplx l3, cplx l4);

// Homogeneous-limit combinations of the jet.
double omega3_homogeneous(const JetOrders& jet);
std::array<double, 4> omega4_homogeneous(const JetOrders& jet);

struct CorrelatorTable {
  static constexpr long kInfiniteLength = -1;
  long length = 0;
  std::map<std::string, double> entries;

  static const std::array<const char*, 5> kTableColumns; // x1..y1y3
  static const std::array<const char*, 8> kAllNames;
};

// The eight named ground-state correlators from the homogeneous jet.
CorrelatorTable correlators_from_jet(const JetOrders& jet, long length);

// 1/2 block (+) 1/2 block in the height-lex ordering (inverse of the
// direct-sum permutation). Input must have trace 1.
Matrix assemble_irf(const Matrix& block);

// Printed forms of the chain density matrices:
// D1 = [[1/2, w/3], [w/3, 1/2]] and the 4x4 D2 built from (w12, w23, Omega3).
Matrix chain_d1(cplx omega12);
Matrix chain_d2(cplx w12, cplx w23, cplx omega3);

} // namespace irf6v

#endif
