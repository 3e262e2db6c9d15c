#include "irf6v/nlie_solver.hpp"

#include "irf6v/special_functions.hpp"
#include "irf6v/thermo_limit.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace irf6v {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLnFlushed = -700.0; // below this the driving flushes b to 0

// FFTW plan pair per transform size, in-place c2c.
class Fft {
 public:
  explicit Fft(int n) : n_(n) {
    buf_ = fftw_alloc_complex(n);
    fwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Fft() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(buf_);
  }
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  // h <- IFFT[ mult .* FFT[h] ]
  void multiply(CArray& h, const Eigen::VectorXd& mult) {
    auto* raw = reinterpret_cast<cplx*>(buf_);
    for (int i = 0; i < n_; ++i) raw[i] = h[i];
    fftw_execute(fwd_);
    for (int i = 0; i < n_; ++i) raw[i] *= mult[i];
    fftw_execute(bwd_);
    const double inv = 1.0 / n_;
    for (int i = 0; i < n_; ++i) h[i] = raw[i] * inv;
  }

 private:
  int n_;
  fftw_complex* buf_;
  fftw_plan fwd_, bwd_;
};

Fft& fft_for(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<Fft>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Fft>(n);
  return *slot;
}

struct Multipliers {
  Eigen::VectorXd plain;      // 1/(1+e^{|k|})
  Eigen::VectorXd shift_up;   // e^{-k}/(1+e^{|k|})   (argument x+i)
  Eigen::VectorXd shift_down; // e^{+k}/(1+e^{|k|})   (argument x-i)
};

Multipliers make_multipliers(const RapidityGrid& g, double eps) {
  const int n = g.n_points;
  Multipliers m;
  m.plain.resize(n);
  m.shift_up.resize(n);
  m.shift_down.resize(n);
  for (int i = 0; i < n; ++i) {
    double k = g.k[i], ak = std::abs(k);
    m.plain[i] = std::exp(-ak) / (1.0 + std::exp(-ak));
    // e^{-k(1-eps)}/(1+e^{|k|}) computed without overflow: the exponent
    // e = -k(1-eps) - |k| is <= 0 for |eps| < 1.
    m.shift_up[i] = std::exp(-k * (1.0 - eps) - ak) / (1.0 + std::exp(-ak));
    m.shift_down[i] = std::exp(k * (1.0 - eps) - ak) / (1.0 + std::exp(-ak));
  }
  return m;
}

CArray log_one_plus_exp(const CArray& ln_f) {
  CArray out(ln_f.size());
  for (long i = 0; i < ln_f.size(); ++i) out[i] = std::log(1.0 + std::exp(ln_f[i]));
  return out;
}

AuxSolution solve_aux_impl(int L, const RapidityGrid& grid, double eps,
                           double tol, int max_iter) {
  // For L = 2 (mod 4) the ground state moves to the twisted sector and the
  // periodic-sector state these equations describe is no longer lowest.
  if (L < 4 || L % 4 != 0)
    throw std::invalid_argument("auxiliary equations need L >= 4 with L = 0 mod 4");
  if (tol < 1e-14) throw std::invalid_argument("tolerance below 1e-14 is not resolvable");
  const int n = grid.n_points;
  Fft& fft = fft_for(n);
  Multipliers mult = make_multipliers(grid, eps);

  Eigen::VectorXd drv(n);
  for (int i = 0; i < n; ++i) {
    double t = std::abs(std::tanh(0.5 * kPi * grid.nodes[i]));
    drv[i] = (t == 0.0) ? -1e4 : L * std::log(t);
  }

  AuxSolution aux;
  aux.grid = grid;
  aux.L = L;
  CArray lnb = drv.cast<cplx>(), lnbb = drv.cast<cplx>();
  double prev_res = std::numeric_limits<double>::infinity();
  double mix = 0.0; // under-relaxation weight on the previous iterate
  int it = 0;
  std::vector<double> history;
  for (; it < max_iter; ++it) {
    CArray lnB = log_one_plus_exp(lnb), lnBb = log_one_plus_exp(lnbb);
    CArray c1 = lnB, c2 = lnBb, c3 = lnB, c4 = lnBb;
    fft.multiply(c1, mult.plain);      // F * lnB
    fft.multiply(c2, mult.shift_up);   // (F * lnBbar)(x+i)
    fft.multiply(c3, mult.shift_down); // (F * lnB)(x-i)
    fft.multiply(c4, mult.plain);      // F * lnBbar
    CArray lnb_new = drv.cast<cplx>() + c1 - c2;
    CArray lnbb_new = drv.cast<cplx>() - c3 + c4;
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      if (drv[i] < kLnFlushed) continue;
      res = std::max(res, std::abs(lnb_new[i] - lnb[i]));
      res = std::max(res, std::abs(lnbb_new[i] - lnbb[i]));
    }
    if (res > prev_res && it > 4) mix = 0.9; // oscillation guard
    if (mix > 0.0) {
      lnb_new = (1.0 - mix) * lnb_new + mix * lnb;
      lnbb_new = (1.0 - mix) * lnbb_new + mix * lnbb;
    }
    lnb.swap(lnb_new);
    lnbb.swap(lnbb_new);
    history.push_back(res);
    prev_res = res;
    if (res < tol) break;
  }
  if (it == max_iter) {
    std::ostringstream msg;
    msg << "auxiliary NLIE did not converge in " << max_iter << " sweeps; tail residuals:";
    for (size_t i = history.size() > 6 ? history.size() - 6 : 0; i < history.size(); ++i)
      msg << " " << history[i];
    throw std::runtime_error(msg.str());
  }

  aux.ln_b = lnb;
  aux.ln_bbar = lnbb;
  aux.b.resize(n);
  aux.bbar.resize(n);
  aux.weight.resize(n);
  aux.weight_bar.resize(n);
  for (int i = 0; i < n; ++i) {
    aux.b[i] = std::exp(lnb[i]);
    aux.bbar[i] = std::exp(lnbb[i]);
    aux.weight[i] = aux.b[i] / (1.0 + aux.b[i]);
    aux.weight_bar[i] = aux.bbar[i] / (1.0 + aux.bbar[i]);
  }
  aux.weight[grid.zero_index] = 0.0;
  aux.weight_bar[grid.zero_index] = 0.0;
  aux.residual = prev_res;
  aux.iterations = it + 1;
  return aux;
}

} // namespace

RapidityGrid::RapidityGrid(double xm, int n) : x_max(xm), n_points(n) {
  if (n < 256 || (n & (n - 1)) != 0)
    throw std::invalid_argument("n_points must be a power of two >= 256");
  if (x_max < 15.0) throw std::invalid_argument("x_max must be >= 15");
  spacing = 2.0 * x_max / n;
  if (spacing >= 0.05) throw std::invalid_argument("grid spacing must be < 0.05");
  nodes.resize(n);
  k.resize(n);
  for (int i = 0; i < n; ++i) nodes[i] = -x_max + i * spacing;
  const double dk = 2.0 * kPi / (n * spacing);
  for (int i = 0; i < n; ++i) k[i] = dk * (i < n / 2 ? i : i - n);
  zero_index = n / 2;
}

double kernel_F(double x) {
  return std::real(gamma_ratio_derivative(cplx(0.0, 1.0) * x));
}

double kernel_K(double x) { return kPi / std::cosh(kPi * x); }

AuxSolution solve_aux(int L, const RapidityGrid& grid, double tol, int max_iter) {
  return solve_aux_impl(L, grid, 0.0, tol, max_iter);
}

AuxSolution solve_aux_eps(int L, const RapidityGrid& grid, double eps, double tol,
                          int max_iter) {
  if (eps <= 0.0 || eps >= 0.5) throw std::invalid_argument("eps must be in (0, 1/2)");
  return solve_aux_impl(L, grid, eps, tol, max_iter);
}

void check_line_distance(const RapidityGrid&, double lambda, int side) {
  // Poles of 1/cosh(pi(x + i(lambda + side/2))) sit on the imaginary axis at
  // heights -lambda and -(lambda+side). A pole exactly on the x = 0 node is
  // handled by masking (the auxiliary measure has an order-L zero there);
  // almost-on-axis poles leave a sliver where rounding in cosh dominates.
  for (double h : {-lambda, -(lambda + side)}) {
    if (h == 0.0) continue;
    if (std::abs(h) < 1e-4)
      throw std::domain_error("spectral point within 1e-4 of a kernel pole line");
  }
}

CArray cosh_line_jet(const RapidityGrid& grid, double lambda, int side, int m) {
  if (m < 0 || m > 3) throw std::invalid_argument("jet order limited to 3");
  if (side != 1 && side != -1) throw std::invalid_argument("side must be +-1");
  check_line_distance(grid, lambda, side);
  const int n = grid.n_points;
  CArray out(n);
  const cplx offset(0.0, lambda + 0.5 * side);
  const bool on_axis_pole = (lambda == 0.0 || lambda == double(-side));
  for (int i = 0; i < n; ++i) {
    if (on_axis_pole && i == grid.zero_index) {
      out[i] = 0.0;
      continue;
    }
    cplx u = kPi * (grid.nodes[i] + offset);
    cplx s = 1.0 / std::cosh(u);
    cplx t = std::tanh(u);
    cplx f;
    switch (m) {
      case 0: f = s; break;
      case 1: f = -s * t; break;
      case 2: f = s * t * t - s * s * s; break;
      default: f = -s * t * t * t + 5.0 * s * s * s * t; break;
    }
    out[i] = std::pow(cplx(0.0, kPi), m) * f;
  }
  return out;
}

GFunctionJet solve_g(const AuxSolution& aux, cplx lambda1, int jet_order,
                     double tol, int max_iter) {
  if (jet_order < 0 || jet_order > 3) throw std::invalid_argument("jet order limited to 3");
  if (std::abs(lambda1.imag()) > 1e-14)
    throw std::invalid_argument("spectral points are real in this solver");
  const RapidityGrid& grid = aux.grid;
  const int n = grid.n_points;
  Fft& fft = fft_for(n);
  Multipliers mult = make_multipliers(grid, 0.0);

  GFunctionJet jet;
  jet.lambda1 = lambda1;
  jet.order = jet_order;
  double worst_res = 0.0;
  int worst_it = 0;
  for (int m = 0; m <= jet_order; ++m) {
    CArray d = kPi * cosh_line_jet(grid, lambda1.real(), -1, m);
    CArray rp = aux.weight.cwiseProduct(d);   // w * d_m, finite everywhere
    CArray rm = aux.weight_bar.cwiseProduct(d);
    CArray gp = rp, gm = rm;
    int it = 0;
    double res = std::numeric_limits<double>::infinity();
    for (; it < max_iter; ++it) {
      CArray c1 = gp, c2 = gm, c3 = gp, c4 = gm;
      fft.multiply(c1, mult.plain);
      fft.multiply(c2, mult.shift_up);
      fft.multiply(c3, mult.shift_down);
      fft.multiply(c4, mult.plain);
      CArray gp_new = rp + aux.weight.cwiseProduct(c1 - c2);
      CArray gm_new = rm + aux.weight_bar.cwiseProduct(c4 - c3);
      res = std::max((gp_new - gp).cwiseAbs().maxCoeff(),
                     (gm_new - gm).cwiseAbs().maxCoeff());
      gp.swap(gp_new);
      gm.swap(gm_new);
      if (res < tol) break;
    }
    if (it == max_iter)
      throw std::runtime_error("linear g-function iteration stagnated at order " +
                               std::to_string(m));
    jet.g_plus.push_back(gp);
    jet.g_minus.push_back(gm);
    worst_res = std::max(worst_res, res);
    worst_it = std::max(worst_it, it + 1);
  }
  jet.residual = worst_res;
  jet.iterations = worst_it;
  return jet;
}

cplx eigenvalue_log(const AuxSolution& aux, double x) {
  const RapidityGrid& grid = aux.grid;
  const int n = grid.n_points;
  // e(z) at z = x + i/2
  auto e_fn = [](cplx z) {
    cplx hz(0.0, 0.5);
    return log_gamma(1.0 - hz * z) + log_gamma(0.5 + hz * z) -
           log_gamma(1.0 + hz * z) - log_gamma(0.5 - hz * z);
  };
  cplx conv = 0.0;
  for (int i = 0; i < n; ++i) {
    cplx lnBB = std::log(1.0 + aux.b[i]) + std::log(1.0 + aux.bbar[i]);
    conv += kernel_K(x - grid.nodes[i]) * lnBB;
  }
  conv *= grid.spacing / (2.0 * kPi);
  return double(aux.L) * e_fn(cplx(x, 0.5)) + cplx(0.0, 0.5 * kPi * aux.L) + conv;
}

} // namespace irf6v
