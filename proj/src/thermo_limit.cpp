#include "irf6v/thermo_limit.hpp"

#include <cmath>
#include <stdexcept>

namespace irf6v {

cplx gamma_ratio_derivative(cplx l) {
  return 0.5 * (digamma(1.0 + 0.5 * l) + digamma(1.0 - 0.5 * l) -
                digamma(0.5 + 0.5 * l) - digamma(0.5 - 0.5 * l));
}

cplx omega_inf(cplx lambda) {
  // Gamma-argument poles sit at odd integers and at even |lambda| >= 2.
  double re = lambda.real(), im = lambda.imag();
  double nearest = std::round(re);
  bool pole = std::abs(im) < 1e-9 && std::abs(re - nearest) < 1e-9 &&
              std::abs(nearest) >= 1.0 - 1e-9;
  if (pole) throw std::domain_error("omega_inf evaluated at a Gamma pole");
  return (lambda * lambda - 1.0) * gamma_ratio_derivative(lambda) + 0.5;
}

JetOrders thermo_jet() {
  auto [ln2, z3, z5] = zeta_constants();
  const double d2 = 4.0 * ln2 - 3.0 * z3;     // omega_inf''(0)
  const double d4 = 36.0 * z3 - 45.0 * z5;    // omega_inf''''(0)
  JetOrders jet;
  jet[{0, 0}] = 0.5 - 2.0 * ln2;
  jet[{1, 0}] = 0.0;
  jet[{1, 1}] = -d2;
  jet[{2, 0}] = d2;
  jet[{2, 1}] = 0.0;
  jet[{2, 2}] = d4;
  jet[{3, 0}] = 0.0;
  jet[{3, 1}] = -d4;
  return jet;
}

} // namespace irf6v
