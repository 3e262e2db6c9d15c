#ifndef IRF6V_OMEGA_HPP
#define IRF6V_OMEGA_HPP

#include "irf6v/nlie_solver.hpp"
#include "irf6v/thermo_limit.hpp"

namespace irf6v {

// omega^{(m,n)} = d^m/dlambda1 d^n/dlambda2 omega at (0,0), m<=3, n<=2,
// at chain length L (kInfiniteLength for the thermodynamic limit).
struct OmegaJet {
  static constexpr long kInfiniteLength = -1;
  long length = 0;
  JetOrders values;          // exactly the orders the correlators consume
  double imag_residual = 0;  // largest imaginary part discarded
};

// Psi(lambda1, lambda2) = 2 F(lambda1-lambda2)
//   + int dx w(x; lambda2) [sigma^+(x) + sigma^-(x)],
// with w the weight-line sech and sigma the measure-weighted g-functions of
// the jet (which must have been solved at lambda1).
cplx psi(const AuxSolution& aux, const GFunctionJet& gjet, cplx lambda1, cplx lambda2);

// omega(l1,l2) = ((l1-l2)^2 - 1) Psi/2 + 1/2. Evaluates the branch
// continued from non-positive arguments; for positive arguments a contour
// residue suppressed like lambda^(L-1) is not included (below 1e-6 at
// L = 12, invisible for L >= 16; the homogeneous jet is unaffected).
cplx omega_value(const AuxSolution& aux, cplx lambda1, cplx lambda2);

// Full derivative jet at the homogeneous point: lambda1-orders from the
// linear g-systems with differentiated driving terms, lambda2-orders from
// the analytic weight-line derivatives, assembled with the product rule on
// ((l1-l2)^2-1)/2 and the closed-form jet of the 2F term. Requires L >= 8
// (lower L leaves the highest-order integrands unintegrable at x = 0).
OmegaJet omega_jet(const AuxSolution& aux);

// |omega(l1, l2-1) + (d(d+2)/(d^2-1)) omega(l1,l2) - (3/2)/(d^2-1)|,
// d = l1 - l2, for any callable omega(l1,l2).
template <typename OmegaFn>
double verify_omega_fe(OmegaFn&& omega, cplx lambda1, cplx lambda2) {
  cplx d = lambda1 - lambda2;
  cplx denom = d * d - 1.0;
  if (std::abs(denom) < 1e-12)
    throw std::domain_error("functional equation pole: (lambda1-lambda2)^2 = 1");
  cplx lhs = omega(lambda1, lambda2 - 1.0) +
             d * (d + 2.0) / denom * omega(lambda1, lambda2) - 1.5 / denom;
  return std::abs(lhs);
}

} // namespace irf6v

#endif
