#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irf6v/exact_diag.hpp"
#include "irf6v/face_model.hpp"

#include <Eigen/Eigenvalues>
#include <random>

using namespace irf6v;

namespace {

// brute-force monodromy matrix, independent of the sweep contraction
Matrix monodromy_dense(int L, cplx lam, const std::vector<cplx>& u,
                       int al, int be, int alp, int bep) {
  const long dim = 1L << L;
  Matrix M = Matrix::Zero(dim, dim);
  for (long a = 0; a < dim; ++a) {
    if (height_bit(a, 0, L) != al) continue;
    for (long b = 0; b < dim; ++b) {
      if (height_bit(b, 0, L) != alp) continue;
      cplx w = 1.0;
      for (int i = 0; i < L && w != 0.0; ++i) {
        int bn = (i + 1 < L) ? height_bit(b, i + 1, L) : bep;
        int an = (i + 1 < L) ? height_bit(a, i + 1, L) : be;
        w *= face_weight(bit_to_height(height_bit(b, i, L)), bit_to_height(bn),
                         bit_to_height(an), bit_to_height(height_bit(a, i, L)), lam - u[i]);
      }
      M(a, b) = w;
    }
  }
  return M;
}

} // namespace

TEST_CASE("face weights take the three weight-class values and vanish elsewhere") {
  CHECK(face_weight(1, 1, 1, 1, 0.5) == cplx(1.5, 0.0));
  CHECK(face_weight(1, 1, -1, -1, 0.0) == cplx(0.0, 0.0));
  CHECK(face_weight(1, 1, 1, -1, 2.3) == cplx(1.0, 0.0));
  // the four patterns outside the listed classes
  CHECK(face_weight(1, 1, -1, 1, 0.7) == cplx(0.0, 0.0));
  CHECK(face_weight(1, -1, -1, -1, 0.7) == cplx(0.0, 0.0));
  CHECK(face_weight(-1, 1, 1, 1, 0.7) == cplx(0.0, 0.0));
  CHECK(face_weight(-1, -1, 1, -1, 0.7) == cplx(0.0, 0.0));
  // crossing point: a(-1) = 0
  CHECK(face_weight(1, 1, 1, 1, -1.0) == cplx(0.0, 0.0));
  CHECK_THROWS(face_weight(2, 1, 1, 1, 0.0));
}

TEST_CASE("Yang-Baxter residual vanishes") {
  CHECK(yang_baxter_residual(0.37, -0.12) < 1e-13);
  CHECK(yang_baxter_residual(0.0, 0.0) < 1e-13);
  CHECK(yang_baxter_residual(cplx(1.5, 0.5), 0.2) < 1e-12);
  double worst = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      worst = std::max(worst, yang_baxter_residual(-1.0 + 0.25 * i, -1.2 + 0.27 * j));
  CHECK(worst < 1e-12);
}

TEST_CASE("transfer matrices commute, also with inhomogeneities") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-0.2, 0.2);
  for (int L : {4, 6, 8}) {
    std::vector<cplx> u(L);
    for (auto& x : u) x = unif(rng);
    cplx lam(unif(rng), unif(rng)), mu(unif(rng), unif(rng));
    Matrix T1 = transfer_matrix(L, lam, u).matrix;
    Matrix T2 = transfer_matrix(L, mu, u).matrix;
    double scale = T1.cwiseAbs().maxCoeff() * T2.cwiseAbs().maxCoeff();
    CHECK((T1 * T2 - T2 * T1).cwiseAbs().maxCoeff() < 1e-11 * scale);
  }
}

TEST_CASE("transfer matrix rejects odd length") {
  CHECK_THROWS(transfer_matrix(5, 0.0, std::vector<cplx>(5, 0.0)));
  CHECK_THROWS(hamiltonian_irf(5));
  CHECK_THROWS(symmetry_operators(3));
}

TEST_CASE("leading eigenvalue of T(0) is real positive") {
  int L = 4;
  Matrix T = transfer_matrix(L, 0.0, std::vector<cplx>(L, 0.0)).matrix;
  auto [lam, v] = leading_eigenpair(T);
  CHECK(lam.imag() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(lam.real() > 0.0);
  // dense full-spectrum oracle: no eigenvalue modulus exceeds it
  Eigen::ComplexEigenSolver<Matrix> es(T);
  double biggest = 0;
  for (int i = 0; i < T.rows(); ++i) biggest = std::max(biggest, std::abs(es.eigenvalues()(i)));
  CHECK(std::abs(lam) == doctest::Approx(biggest).epsilon(1e-10));
  CHECK((T * v - lam * v).norm() < 1e-9);
}

TEST_CASE("leading_eigenpair handles the identity and bad input") {
  Matrix I = Matrix::Identity(8, 8);
  auto [lam, v] = leading_eigenpair(I);
  CHECK(std::abs(lam - 1.0) < 1e-12);
  CHECK(std::abs(v[0] - 1.0) < 1e-12);
  CHECK_THROWS(leading_eigenpair(Matrix::Zero(2, 2)));
}

TEST_CASE("monodromy sweep agrees with the brute-force element table") {
  int L = 4;
  std::vector<cplx> u = {0.1, -0.2, 0.05, 0.0};
  cplx lam(0.23, 0.11);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  Vector x(1 << L);
  for (int i = 0; i < x.size(); ++i) x[i] = cplx(gauss(rng), gauss(rng));
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      for (int alp = 0; alp < 2; ++alp)
        for (int bep = 0; bep < 2; ++bep) {
          Vector fast = monodromy_apply(L, lam, u, al, be, alp, bep, x);
          Vector slow = monodromy_dense(L, lam, u, al, be, alp, bep) * x;
          CHECK((fast - slow).norm() < 1e-12 * std::max(1.0, slow.norm()));
        }
  // the pinned sums reassemble the periodic transfer matrix
  Vector ts = transfer_apply(L, lam, u, x);
  Vector td = transfer_matrix(L, lam, u).matrix * x;
  CHECK((ts - td).norm() < 1e-12 * td.norm());
}

TEST_CASE("Hamiltonian equals the logarithmic transfer-matrix derivative") {
  int L = 4;
  std::vector<cplx> u0(L, 0.0);
  Matrix H = hamiltonian_irf(L).matrix;
  CHECK((H - H.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  double eps = 1e-6;
  Matrix T0 = transfer_matrix(L, 0.0, u0).matrix;
  Matrix Tp = transfer_matrix(L, eps, u0).matrix;
  Matrix Tm = transfer_matrix(L, -eps, u0).matrix;
  Matrix Hfd = T0.inverse() * (Tp - Tm) / (2 * eps);
  CHECK((Hfd - H).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("Hamiltonian commutes with both symmetry operators") {
  for (int L : {4, 6, 8}) {
    Matrix H = hamiltonian_irf(L).matrix;
    auto [sz, px] = symmetry_operators(L);
    CHECK((H * sz.matrix - sz.matrix * H).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((H * px.matrix - px.matrix * H).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("symmetry operators: Pi^x squares to one, spectrum +-1") {
  auto [sz, px] = symmetry_operators(4);
  Matrix I = Matrix::Identity(16, 16);
  CHECK((px.matrix * px.matrix - I).cwiseAbs().maxCoeff() == 0.0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(px.matrix);
  for (int i = 0; i < 16; ++i)
    CHECK(std::abs(std::abs(es.eigenvalues()(i)) - 1.0) < 1e-12);
  auto [sz8, px8] = symmetry_operators(8);
  CHECK((sz8.matrix * px8.matrix - px8.matrix * sz8.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hamiltonian_apply matches the dense matrix") {
  int L = 6;
  Matrix H = hamiltonian_irf(L).matrix;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  Vector x(1 << L);
  for (int i = 0; i < x.size(); ++i) x[i] = cplx(gauss(rng), gauss(rng));
  CHECK((hamiltonian_apply(L, x) - H * x).norm() < 1e-12 * (H * x).norm());
}
