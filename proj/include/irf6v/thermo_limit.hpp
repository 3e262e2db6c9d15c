#ifndef IRF6V_THERMO_LIMIT_HPP
#define IRF6V_THERMO_LIMIT_HPP

#include "irf6v/special_functions.hpp"

#include <map>
#include <utility>

namespace irf6v {

// Derivative orders (m,n) of omega at the homogeneous point required by the
// short-distance correlators.
using JetOrders = std::map<std::pair<int, int>, double>;

// Even part of the Gamma-ratio log derivative:
// Ephi(lambda) = 1/2 [psi(1+l/2) + psi(1-l/2) - psi(1/2+l/2) - psi(1/2-l/2)].
// omega_inf(lambda) = (lambda^2-1) Ephi(lambda) + 1/2.
cplx gamma_ratio_derivative(cplx lambda);

// Thermodynamic two-site function. Throws near the digamma poles
// (odd integers and negative even integers of the Gamma arguments).
cplx omega_inf(cplx lambda);

// Closed-form jet at the homogeneous point:
//   omega^{(m,n)} = (-1)^n omega_inf^{(m+n)}(0),
//   omega_inf(l) = 1/2 - 2 ln2 + (2 ln2 - 3/2 z3) l^2 + (3/2 z3 - 15/8 z5) l^4 + ...
// Odd total orders vanish.
JetOrders thermo_jet();

} // namespace irf6v

#endif
