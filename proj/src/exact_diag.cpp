#include "irf6v/exact_diag.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace irf6v {

namespace {

// weight on bit heights, local copy of the face table through face_weight
inline cplx wbits(int a, int b, int c, int d, cplx lam) {
  return face_weight(bit_to_height(a), bit_to_height(b), bit_to_height(c),
                     bit_to_height(d), lam);
}

struct LanczosResult {
  double e0, e1;
  Vector ground;
};

// Lanczos with full reorthogonalization for the lowest eigenpair of the
// (real symmetric) Hamiltonian; returns the two lowest Ritz values.
LanczosResult lanczos_lowest(int L, double tol = 1e-13, int max_vec = 400) {
  const long dim = 1L << L;
  std::mt19937_64 rng(20240613ULL);
  std::normal_distribution<double> gauss;
  Vector v = Vector::Zero(dim);
  for (long i = 0; i < dim; ++i) v[i] = gauss(rng);
  v.normalize();

  std::vector<Vector> basis;
  std::vector<double> alpha, beta;
  Vector w;
  LanczosResult res{0, 0, Vector()};
  for (int m = 0; m < max_vec; ++m) {
    basis.push_back(v);
    w = hamiltonian_apply(L, v);
    double a = std::real(v.dot(w));
    alpha.push_back(a);
    w -= a * v;
    if (!beta.empty()) w -= beta.back() * basis[m - 1];
    for (const auto& q : basis) w -= q.dot(w) * q; // full reorthogonalization
    double b = w.norm();

    if (m >= 1 && (m % 5 == 0 || b < 1e-14)) {
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, m + 1);
      for (int i = 0; i <= m; ++i) T(i, i) = alpha[i];
      for (int i = 0; i < m; ++i) { T(i, i + 1) = beta[i]; T(i + 1, i) = beta[i]; }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
      double resid = b * std::abs(es.eigenvectors()(m, 0));
      if (resid < tol || b < 1e-14 || m == max_vec - 1) {
        res.e0 = es.eigenvalues()(0);
        res.e1 = (m >= 1) ? es.eigenvalues()(1) : res.e0;
        Vector g = Vector::Zero(dim);
        for (int i = 0; i <= m; ++i) g += es.eigenvectors()(i, 0) * basis[i];
        g.normalize();
        res.ground = g;
        return res;
      }
    }
    if (b < 1e-14) break;
    beta.push_back(b);
    v = w / b;
  }
  throw std::runtime_error("lanczos did not converge");
}

void fix_phase(Vector& v) {
  for (long i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > 1e-12) {
      v *= std::abs(v[i]) / v[i];
      return;
    }
}

} // namespace

GroundState::GroundState(int L, std::vector<cplx> u, Vector left, Vector right)
    : L_(L), u_(std::move(u)), left_(std::move(left)), right_(std::move(right)) {
  norm_ = left_.transpose() * right_;
  if (std::abs(norm_) < 1e-12)
    throw std::runtime_error("left/right eigenvector pairing is singular");
}

cplx GroundState::eigenvalue(cplx lambda) const {
  auto key = std::make_pair(lambda.real(), lambda.imag());
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Vector Tv = transfer_apply(L_, lambda, u_, right_);
  cplx val = (left_.transpose() * Tv)(0, 0) / norm_;
  cache_.emplace(key, val);
  return val;
}

double GroundState::eigen_residual(cplx lambda) const {
  Vector Tv = transfer_apply(L_, lambda, u_, right_);
  cplx val = (left_.transpose() * Tv)(0, 0) / norm_;
  return (Tv - val * right_).norm() / Tv.norm();
}

GroundState ground_state(int L) {
  require_even_length(L);
  if (L > 14) throw std::invalid_argument("exact diagonalization limited to L <= 14");
  LanczosResult r = lanczos_lowest(L);
  if (std::abs(r.e1 - r.e0) < 1e-10)
    throw std::runtime_error("ground level degenerate within 1e-10, state ambiguous");
  Vector g = r.ground;
  fix_phase(g);
  // the homogeneous ground state is real; drop rounding-level phases
  for (long i = 0; i < g.size(); ++i) g[i] = g[i].real();
  g.normalize();
  return GroundState(L, std::vector<cplx>(L, 0.0), g, g);
}

GroundState ground_state(int L, const std::vector<cplx>& u) {
  require_even_length(L);
  if (int(u.size()) != L) throw std::invalid_argument("need L inhomogeneities");
  bool homogeneous = true;
  for (auto& ui : u) homogeneous = homogeneous && (ui == 0.0);
  if (homogeneous) return ground_state(L);
  if (L > 10) throw std::invalid_argument("inhomogeneous ground state limited to L <= 10");

  // leading state of T(-1/2, u); the physical spectral domain is (-1, 0)
  Matrix T = transfer_matrix(L, cplx(-0.5, 0.0), u).matrix;
  auto pick = [](const Matrix& M) {
    Eigen::ComplexEigenSolver<Matrix> es(M);
    int idx = 0;
    double best = 0;
    for (int i = 0; i < M.rows(); ++i)
      if (std::abs(es.eigenvalues()(i)) > best) {
        best = std::abs(es.eigenvalues()(i));
        idx = i;
      }
    // degeneracy of the leading modulus is an ambiguity
    for (int i = 0; i < M.rows(); ++i)
      if (i != idx && std::abs(std::abs(es.eigenvalues()(i)) - best) < 1e-10 * best)
        throw std::runtime_error("leading transfer eigenvalue degenerate, state ambiguous");
    return std::make_pair(es.eigenvalues()(idx), Vector(es.eigenvectors().col(idx)));
  };
  auto [lamR, right] = pick(T);
  auto [lamL, left] = pick(Matrix(T.transpose()));
  if (std::abs(lamR - lamL) > 1e-8 * std::abs(lamR))
    throw std::runtime_error("left/right leading eigenvalues disagree");
  fix_phase(right);
  fix_phase(left);
  return GroundState(L, u, left, right);
}

std::pair<cplx, Vector> leading_eigenpair(const Matrix& T, double tol, int max_iter) {
  const long dim = T.rows();
  if (dim < 4 || T.cols() != dim) throw std::invalid_argument("need a square matrix, dim >= 4");
  // shift makes modulus-degenerate unimodular spectra (e.g. T at the shift
  // point lambda=0) single out the Perron-continued state
  double shift = 1.0;
  std::vector<double> history;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Vector v = Vector::Zero(dim);
    if (attempt == 0) {
      v[0] = 1.0;
    } else {
      std::mt19937_64 rng(987654321ULL);
      std::normal_distribution<double> gauss;
      for (long i = 0; i < dim; ++i) v[i] = cplx(gauss(rng), gauss(rng));
    }
    v.normalize();
    cplx prev = 0.0;
    for (int it = 0; it < max_iter; ++it) {
      Vector w = T * v + shift * v;
      double nw = w.norm();
      if (nw < 1e-300) break; // start vector annihilated, retry
      w /= nw;
      cplx rq = (v.adjoint() * (T * w))(0, 0) / (v.adjoint() * w)(0, 0);
      double change = std::abs(rq - prev);
      prev = rq;
      v = w;
      if (change < tol * std::max(1.0, std::abs(rq))) {
        Vector Tv = T * v;
        cplx lam = (v.adjoint() * Tv)(0, 0);
        if ((Tv - lam * v).norm() <= 1e-10 * std::max(1.0, Tv.norm())) {
          fix_phase(v);
          return {lam, v};
        }
      }
      if (it % 100 == 0) history.push_back(change);
    }
  }
  std::ostringstream msg;
  msg << "power iteration failed to converge; residual history:";
  for (double h : history) msg << " " << h;
  throw std::runtime_error(msg.str());
}

DensityMatrix reduced_density_irf(const GroundState& gs,
                                  const std::vector<cplx>& lambdas, int n) {
  const int L = gs.length();
  if (n < 1 || n > L) throw std::invalid_argument("need 1 <= n <= L");
  if (int(lambdas.size()) != n) throw std::invalid_argument("need n spectral points");
  const long dn = 1L << (n + 1);

  cplx denom = gs.norm();
  for (auto& l : lambdas) denom *= gs.eigenvalue(l);

  DensityMatrix D;
  D.matrix = Matrix::Zero(dn, dn);
  D.sites = n;
  D.basis_tag = "height-lex";
  D.spectral_points = lambdas;
  for (long A = 0; A < dn; ++A) {
    std::vector<int> al(n + 1);
    for (int k = 0; k <= n; ++k) al[k] = int((A >> (n - k)) & 1);
    for (long B = 0; B < dn; ++B) {
      std::vector<int> be(n + 1);
      for (int k = 0; k <= n; ++k) be[k] = int((B >> (n - k)) & 1);
      if (al[0] != be[0] || al[n] != be[n]) continue;
      Vector v = gs.right();
      for (int k = n - 1; k >= 0; --k)
        v = monodromy_apply(L, lambdas[k], gs.inhomogeneities(),
                            al[k], be[k], al[k + 1], be[k + 1], v);
      D.matrix(A, B) = (gs.left().transpose() * v)(0, 0) / denom;
    }
  }
  return D;
}

DensityMatrix apply_qkz_operator(const DensityMatrix& D, const std::vector<cplx>& lam) {
  const int n = D.sites;
  if (int(lam.size()) != n) throw std::invalid_argument("need n spectral points");
  const long dn = 1L << (n + 1);
  if (D.matrix.rows() != dn) throw std::invalid_argument("density matrix dimension mismatch");

  cplx pref = 1.0;
  for (int k = 0; k < n; ++k) {
    cplx d = lam[k] - lam[n - 1];
    cplx f = 1.0 - d * d;
    if (std::abs(f) < 1e-12)
      throw std::runtime_error("singular qKZ prefactor: (lambda_k - lambda_n)^2 = 1");
    pref *= f;
  }

  DensityMatrix out;
  out.matrix = Matrix::Zero(dn, dn);
  out.sites = n;
  out.basis_tag = D.basis_tag;
  out.spectral_points = lam;
  std::vector<int> al(n + 1), be(n + 1), ga(n + 1), de(n + 1);
  for (long A = 0; A < dn; ++A) {
    for (int k = 0; k <= n; ++k) al[k] = int((A >> (n - k)) & 1);
    for (long B = 0; B < dn; ++B) {
      for (int k = 0; k <= n; ++k) be[k] = int((B >> (n - k)) & 1);
      if (al[0] != be[0] || al[n] != be[n]) continue;
      cplx sum = 0.0;
      for (long g = 0; g < dn; ++g) {
        for (int k = 0; k <= n; ++k) ga[k] = int((g >> (n - k)) & 1);
        if (ga[n] != al[n - 1]) continue; // delta_{alpha_n, gamma_{n+1}}
        cplx w1 = 1.0;
        for (int k = 0; k < n - 1 && w1 != 0.0; ++k)
          w1 *= wbits(al[k], al[k + 1], ga[k + 1], ga[k], lam[n - 1] - lam[k]);
        if (w1 == 0.0) continue;
        for (long dd = 0; dd < dn; ++dd) {
          cplx Bgd = D.matrix(g, dd);
          if (Bgd == 0.0) continue;
          for (int k = 0; k <= n; ++k) de[k] = int((dd >> (n - k)) & 1);
          cplx w2 = 1.0;
          for (int k = 0; k < n - 1 && w2 != 0.0; ++k)
            w2 *= wbits(de[k + 1], be[k + 1], be[k], de[k], lam[k] - lam[n - 1]);
          if (w2 == 0.0) continue;
          w2 *= wbits(de[n], be[n], be[n - 1], de[n - 1], cplx(-1.0, 0.0));
          sum += w1 * Bgd * w2;
        }
      }
      out.matrix(A, B) = sum / pref;
    }
  }
  return out;
}

double verify_qkz(int L, int n, const std::vector<cplx>& lambdas,
                  const std::vector<cplx>& u) {
  if (int(lambdas.size()) != n) throw std::invalid_argument("need n spectral points");
  bool matches = false;
  for (auto& uk : u) matches = matches || std::abs(lambdas[n - 1] - uk) < 1e-12;
  if (!matches)
    throw std::invalid_argument("qKZ requires lambda_n to equal one of the inhomogeneities");

  GroundState gs = ground_state(L, u);
  DensityMatrix Dn = reduced_density_irf(gs, lambdas, n);
  std::vector<cplx> shifted = lambdas;
  shifted[n - 1] -= 1.0;
  DensityMatrix Dsh = reduced_density_irf(gs, shifted, n);
  DensityMatrix An = apply_qkz_operator(Dn, lambdas);
  return (Dsh.matrix - An.matrix).cwiseAbs().maxCoeff();
}

DensityMatrix partial_trace_to_chain(const DensityMatrix& D) {
  const int n = D.sites;
  if (n < 2) throw std::invalid_argument("partial trace needs n >= 2");
  const long dm = 1L << (n - 1);
  DensityMatrix out;
  out.matrix = Matrix::Zero(dm, dm);
  out.sites = n - 1;
  out.basis_tag = "chain-height-lex";
  out.spectral_points = D.spectral_points;
  for (long A = 0; A < dm; ++A)
    for (long B = 0; B < dm; ++B) {
      cplx s = 0.0;
      for (int a1 = 0; a1 < 2; ++a1)
        for (int an = 0; an < 2; ++an) {
          long full_a = (long(a1) << n) | (A << 1) | an;
          long full_b = (long(a1) << n) | (B << 1) | an;
          s += D.matrix(full_a, full_b);
        }
      out.matrix(A, B) = s;
    }
  return out;
}

std::vector<long> direct_sum_permutation(int n) {
  // new index (block * 2^n + spin-lex) -> height-lex index
  std::vector<long> perm(1L << (n + 1));
  for (int blk = 0; blk < 2; ++blk)
    for (long s = 0; s < (1L << n); ++s) {
      long heights = blk;
      int prev = blk;
      for (int i = 0; i < n; ++i) {
        int si = int((s >> (n - 1 - i)) & 1);
        int next = si ^ blk ^ prev; // s_i = a_1 xor a_i xor a_{i+1}
        heights = (heights << 1) | next;
        prev = next;
      }
      perm[(long(blk) << n) | s] = heights;
    }
  return perm;
}

Matrix xxx_block(const DensityMatrix& D, double tol) {
  const int n = D.sites;
  const long dn = 1L << (n + 1), half = dn / 2;
  auto perm = direct_sum_permutation(n);
  Matrix Dr(dn, dn);
  for (long i = 0; i < dn; ++i)
    for (long j = 0; j < dn; ++j) Dr(i, j) = D.matrix(perm[i], perm[j]);
  double off = std::max(Dr.block(0, half, half, half).cwiseAbs().maxCoeff(),
                        Dr.block(half, 0, half, half).cwiseAbs().maxCoeff());
  double mismatch =
      (Dr.block(0, 0, half, half) - Dr.block(half, half, half, half)).cwiseAbs().maxCoeff();
  if (off > tol || mismatch > tol)
    throw std::runtime_error("direct-sum structure violated (off-block " +
                             std::to_string(off) + ", block mismatch " +
                             std::to_string(mismatch) + ")");
  return 2.0 * Dr.block(0, 0, half, half);
}

cplx omega_from_ed(int L, cplx lambda1, cplx lambda2, const std::vector<cplx>& u) {
  GroundState gs = ground_state(L, u);
  DensityMatrix D2 = reduced_density_irf(gs, {lambda1, lambda2}, 2);
  Matrix X = xxx_block(D2);
  // X = (1/4 - w/6) I + (w/3) P12; cross-check the two independent reads
  cplx w = 3.0 * X(1, 2);
  cplx w_diag = 6.0 * (X(0, 0) - 0.25);
  if (std::abs(w - w_diag) > 1e-8 * std::max(1.0, std::abs(w)))
    throw std::runtime_error("two-site block is not of identity+permutation form");
  return w;
}

std::map<std::string, double> ed_correlators(int L) {
  GroundState gs = ground_state(L);
  const Vector& v = gs.right();
  auto expect = [&](const std::vector<std::pair<int, char>>& string_ops) {
    Vector w = v;
    for (auto it = string_ops.rbegin(); it != string_ops.rend(); ++it)
      w = pauli_operator(L, it->first, it->second) * w;
    return std::real((v.adjoint() * w)(0, 0));
  };
  std::map<std::string, double> out;
  out["x1"] = expect({{0, 'x'}});
  out["x1x2"] = expect({{0, 'x'}, {1, 'x'}});
  out["x1x2x3"] = expect({{0, 'x'}, {1, 'x'}, {2, 'x'}});
  out["x1x3"] = expect({{0, 'x'}, {2, 'x'}});
  out["y1y3"] = expect({{0, 'y'}, {2, 'y'}});
  out["z1z3"] = expect({{0, 'z'}, {2, 'z'}});
  out["yxy"] = expect({{0, 'y'}, {1, 'x'}, {2, 'y'}});
  out["zxz"] = expect({{0, 'z'}, {1, 'x'}, {2, 'z'}});
  return out;
}

double correlator_ed(int L, const std::string& name) {
  auto all = ed_correlators(L);
  auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown correlator name: " + name);
  return it->second;
}

std::vector<cplx> draw_inhomogeneities(int L, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-0.25, 0.25);
  std::vector<cplx> u;
  while (int(u.size()) < L) {
    double cand = unif(rng);
    bool ok = true;
    for (auto& v : u) ok = ok && std::abs(cand - v.real()) > 0.02;
    if (ok) u.emplace_back(cand, 0.0);
  }
  return u;
}

} // namespace irf6v
