#ifndef IRF6V_SPECIAL_FUNCTIONS_HPP
#define IRF6V_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace irf6v {

using cplx = std::complex<double>;

// digamma psi(z), valid in the whole complex plane away from the poles
// at z = 0, -1, -2, ...  Asymptotic series after upward recurrence.
cplx digamma(cplx z);

// log Gamma(z), principal branch (Lanczos).
cplx log_gamma(cplx z);

// Riemann zeta at integer s >= 2 through the eta series with
// Cohen-Rodriguez Villegas-Zagier acceleration.
double zeta(int s);

struct ZetaConstants {
  double ln2;
  double zeta3;
  double zeta5;
};

// (ln 2, zeta(3), zeta(5)) to full double precision.
ZetaConstants zeta_constants();

} // namespace irf6v

#endif
