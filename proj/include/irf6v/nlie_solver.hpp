#ifndef IRF6V_NLIE_SOLVER_HPP
#define IRF6V_NLIE_SOLVER_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace irf6v {

using cplx = std::complex<double>;
using CArray = Eigen::VectorXcd;

// Uniform symmetric grid x_j = -x_max + j dx; n_points must be a power of
// two >= 256, x_max >= 15, spacing < 0.05. x = 0 is a node.
struct RapidityGrid {
  double x_max;
  int n_points;
  double spacing;
  std::vector<double> nodes;
  std::vector<double> k; // FFT angular frequencies
  int zero_index;

  RapidityGrid(double x_max = 25.0, int n_points = 4096);
};

// Convolution kernels, paper normalization (f*g)(x) = 1/(2pi) int f(x-y) g(y) dy:
//   F(x) = int e^{-|k|/2 + i k x} / (2 cosh(k/2)) dk, evaluated via digamma.
//   K(x) = pi / cosh(pi x).
double kernel_F(double x);
double kernel_K(double x);

// Auxiliary functions b, bbar on the grid. B = 1+b. weight = 1/(1+b^{-1}),
// exactly zero at x = 0 where the driving term diverges to -infinity.
struct AuxSolution {
  RapidityGrid grid;
  int L = 0;
  CArray ln_b, ln_bbar;
  CArray b, bbar;
  CArray weight, weight_bar;
  double residual = 0.0;
  int iterations = 0;
};

// Iterates ln b = L ln tanh(pi x/2) + F*ln B - F*ln Bbar(x+i) and the
// conjugate equation. The shifted convolutions use the exact Fourier
// multipliers of F(x +- i(1-0)), the boundary values from inside the
// analyticity strip. Throws on non-convergence with the residual history.
AuxSolution solve_aux(int L, const RapidityGrid& grid, double tol = 1e-13,
                      int max_iter = 5000);

// Same solver with the strip shifts replaced by finite-epsilon kernels
// F(x +- i(1-eps)); verification mode for Richardson extrapolation eps->0.
AuxSolution solve_aux_eps(int L, const RapidityGrid& grid, double eps,
                          double tol = 1e-13, int max_iter = 5000);

// lambda1-derivative jet of the measure-weighted auxiliary functions
//   sigma^+ = g^+ / (1 + b^{-1}),  sigma^- = g^- / (1 + bbar^{-1}),
// solving the linear system
//   sigma^+ = w [d_m + F*sigma^+ - F*sigma^-(x+i)],
//   sigma^- = wbar [d_m - F*sigma^+(x-i) + F*sigma^-],
// where d_m is the m-th lambda1-derivative of the driving term
// pi / cosh(pi(x + i(lambda1 - 1/2))). The weighted form keeps every grid
// quantity finite at the homogeneous point (the measure has a zero of
// order L at x = 0).
struct GFunctionJet {
  cplx lambda1;
  int order = 0;
  std::vector<CArray> g_plus;   // weighted, per derivative order
  std::vector<CArray> g_minus;
  double residual = 0.0;
  int iterations = 0;
};

GFunctionJet solve_g(const AuxSolution& aux, cplx lambda1, int jet_order,
                     double tol = 1e-13, int max_iter = 5000);

// ln[ Lambda_0(i x - 1/2) / (i x + 1/2)^L ] = L e(x + i/2) + i pi L / 2
//   + (K * ln B Bbar)(x), with e the log-Gamma ratio.
cplx eigenvalue_log(const AuxSolution& aux, double x);

// m-th lambda-derivative of 1/cosh(pi(x + i(lambda + side/2))) sampled on
// the grid (side = -1: driving-term line, side = +1: weight line of the
// two-site integral). The x = 0 node is zeroed when a pole lands on it;
// integrands pair these samples with functions vanishing there.
CArray cosh_line_jet(const RapidityGrid& grid, double lambda, int side, int m);

// Throws unless every pole of the 1/cosh line sits either exactly on the
// masked node or at least four spacings away from the real axis.
void check_line_distance(const RapidityGrid& grid, double lambda, int side);

} // namespace irf6v

#endif
