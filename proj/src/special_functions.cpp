#include "irf6v/special_functions.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace irf6v {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Bernoulli B_{2n}/(2n) for the digamma asymptotic tail.
constexpr std::array<double, 7> kDigammaTail = {
    1.0 / 12.0,  -1.0 / 120.0,   1.0 / 252.0,  -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
};
} // namespace

cplx digamma(cplx z) {
  cplx shift = 0.0;
  if (z.real() < 0.5) {
    // reflection: psi(z) = psi(1-z) - pi cot(pi z)
    shift = -kPi / std::tan(kPi * z);
    z = 1.0 - z;
  }
  while (std::abs(z) < 9.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  cplx inv = 1.0 / z;
  cplx inv2 = inv * inv;
  cplx sum = std::log(z) - 0.5 * inv;
  cplx pw = inv2;
  for (double c : kDigammaTail) {
    sum -= c * pw;
    pw *= inv2;
  }
  return sum + shift;
}

cplx log_gamma(cplx z) {
  // Lanczos, g = 7, 9 terms.
  static const std::array<double, 9> c = {
      0.99999999999980993,      676.5203681218851,    -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
  };
  if (z.real() < 0.5) {
    // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  cplx x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double zeta(int s) {
  // eta(s) by the Cohen-Rodriguez Villegas-Zagier scheme, then
  // zeta(s) = eta(s) / (1 - 2^{1-s}).
  const int n = 40;
  std::vector<double> d(n + 1);
  double b = 1.0;
  d[0] = b;
  for (int i = 1; i <= n; ++i) {
    b *= 2.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * i);
    d[i] = d[i - 1] + b;
  }
  double eta = 0.0, sign = 1.0;
  for (int k = 0; k < n; ++k) {
    eta += sign * (d[n] - d[k]) / std::pow(double(k + 1), double(s));
    sign = -sign;
  }
  eta /= d[n];
  return eta / (1.0 - std::pow(2.0, 1.0 - double(s)));
}

ZetaConstants zeta_constants() {
  return ZetaConstants{std::log(2.0), zeta(3), zeta(5)};
}

} // namespace irf6v
