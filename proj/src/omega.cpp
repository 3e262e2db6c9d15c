#include "irf6v/omega.hpp"

#include <cmath>
#include <stdexcept>

namespace irf6v {

namespace {

// int dx w_n(x; lambda2) [sigma+_m + sigma-_m]; the masked x=0 node is
// exact (the weighted g-functions vanish there to order ~L).
cplx weighted_integral(const AuxSolution& aux, const GFunctionJet& gjet, int m,
                       double lambda2, int n_order) {
  CArray w = cosh_line_jet(aux.grid, lambda2, +1, n_order);
  const CArray& gp = gjet.g_plus[m];
  const CArray& gm = gjet.g_minus[m];
  cplx sum = 0.0;
  for (int i = 0; i < aux.grid.n_points; ++i) sum += w[i] * (gp[i] + gm[i]);
  return sum * aux.grid.spacing;
}

} // namespace

cplx psi(const AuxSolution& aux, const GFunctionJet& gjet, cplx lambda1, cplx lambda2) {
  if (std::abs(lambda1 - gjet.lambda1) > 1e-14)
    throw std::invalid_argument("g-function jet was solved at a different lambda1");
  if (std::abs(lambda2.imag()) > 1e-14)
    throw std::invalid_argument("spectral points are real in this solver");
  check_line_distance(aux.grid, lambda2.real(), +1);
  cplx I = weighted_integral(aux, gjet, 0, lambda2.real(), 0);
  return 2.0 * gamma_ratio_derivative(lambda1 - lambda2) + I;
}

cplx omega_value(const AuxSolution& aux, cplx lambda1, cplx lambda2) {
  GFunctionJet gjet = solve_g(aux, lambda1, 0);
  cplx d = lambda1 - lambda2;
  return (d * d - 1.0) * 0.5 * psi(aux, gjet, lambda1, lambda2) + 0.5;
}

OmegaJet omega_jet(const AuxSolution& aux) {
  if (aux.L < 8)
    throw std::invalid_argument("full omega jet needs L >= 8");
  GFunctionJet gjet = solve_g(aux, 0.0, 3);

  // I^{(m,n)} of the finite-size integral
  cplx I[4][3];
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n) I[m][n] = weighted_integral(aux, gjet, m, 0.0, n);

  // jet of S = ((l1-l2)^2 - 1)/2 at the origin
  auto S = [](int m, int n) -> double {
    if (m == 0 && n == 0) return -0.5;
    if (m == 1 && n == 1) return -1.0;
    if ((m == 2 && n == 0) || (m == 0 && n == 2)) return 1.0;
    return 0.0;
  };
  auto binom = [](int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };

  JetOrders inf_jet = thermo_jet();
  OmegaJet jet;
  jet.length = aux.L;
  double worst_im = 0.0;
  for (auto& [mn, winf] : inf_jet) {
    auto [m, n] = mn;
    cplx v = winf; // jet of omega_inf(l1 - l2), the 2F part
    for (int mp = 0; mp <= m; ++mp)
      for (int np = 0; np <= n; ++np) {
        double s = S(m - mp, n - np);
        if (s != 0.0) v += binom(m, mp) * binom(n, np) * s * I[mp][np];
      }
    worst_im = std::max(worst_im, std::abs(v.imag()));
    jet.values[mn] = v.real();
  }
  if (worst_im > 1e-9)
    throw std::runtime_error("omega jet lost imaginary-part purity: " +
                             std::to_string(worst_im));
  jet.imag_residual = worst_im;
  return jet;
}

} // namespace irf6v
