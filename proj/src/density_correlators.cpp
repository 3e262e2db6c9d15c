#include "irf6v/density_correlators.hpp"

#include "irf6v/exact_diag.hpp"

#include <cmath>
#include <stdexcept>

namespace irf6v {

namespace {

constexpr double kCoincident = 1e-12;

void require_distinct(std::initializer_list<cplx> ls) {
  std::vector<cplx> v(ls);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(v[i] - v[j]) < kCoincident)
        throw std::domain_error("coincident spectral points; use the homogeneous branch");
}

using C4 = std::array<cplx, 4>;

inline cplx lam(const C4& v, int i, int j) { return v[i - 1] - v[j - 1]; }

C4 perm(const C4& v, int a, int b, int c, int d) {
  return {v[a - 1], v[b - 1], v[c - 1], v[d - 1]};
}

// ---- Appendix tables for rho^(4)_k, k = 9..14 ------------------------------

cplx Q1_fn(int k, const C4& v) {
  cplx l12 = lam(v, 1, 2), l13 = lam(v, 1, 3), l23 = lam(v, 2, 3);
  switch (k) {
    case 9:
      return -(14.0 - l12 * l12 + 10.0 * l13 * l23) / 60.0;
    case 10: {
      cplx l14 = lam(v, 1, 4), l24 = lam(v, 2, 4);
      cplx core = -1.0 / 6.0 + (l12 * l12 - 4.0) / (20.0 * l12 * l13 * l23 * l14) -
                  (l12 * l12 - 4.0) / (20.0 * l12 * l13 * l23 * l24);
      return core * l13 * l14 * l23 * l24;
    }
    case 11:
      return -(l12 - 2.0) * (2.0 + l12 + 5.0 * (l13 + 1.0) * l23) / 120.0;
    case 12:
      return -(l12 - 2.0) * (8.0 - l12 + 5.0 * (l13 - 1.0) * l23) / 120.0;
    case 13:
      return (l12 + 2.0) * (8.0 + l12 + 5.0 * (l13 + 1.0) * l23) / 120.0;
    case 14:
      return (l12 + 2.0) * (2.0 - l12 + 5.0 * (l13 - 1.0) * l23) / 120.0;
    default:
      throw std::invalid_argument("rho4 coefficients tabulated for k = 9..14 only");
  }
}

cplx Q2_fn(int k, const C4& v) {
  cplx l12 = lam(v, 1, 2), l13 = lam(v, 1, 3), l14 = lam(v, 1, 4);
  cplx l23 = lam(v, 2, 3), l24 = lam(v, 2, 4), l34 = lam(v, 3, 4);
  switch (k) {
    case 9:
      return -(l14 * l24 / 90.0) * (2.0 - 3.0 * l12 * l12 - 10.0 * l13 * l23) +
             (l24 / (90.0 * l12)) *
                 (22.0 + 2.0 * l23 * l23 - 6.0 * l13 * l12 - 3.0 * l13 * l13 * l12 * l12) +
             (l14 / (90.0 * l12)) *
                 (22.0 + 2.0 * l13 * l13 + 6.0 * l23 * l12 - 3.0 * l23 * l23 * l12 * l12);
    case 10:
      return (l12 * l12 - 4.0) * (l34 * l34 - 4.0) / 90.0;
    case 11:
      return (l12 - 2.0) * (l34 - 2.0) *
             (3.0 + l23 - l14 + 3.0 * l14 * l23 + 2.0 * l13 * l24) / 180.0;
    case 12:
      return -(l12 - 2.0) * (l34 + 2.0) *
             (7.0 + l12 - l34 + 3.0 * l14 * l23 + 2.0 * l13 * l24) / 180.0;
    case 13:
      return -(l12 + 2.0) * (l34 - 2.0) *
             (7.0 - l12 + l34 + 3.0 * l14 * l23 + 2.0 * l13 * l24) / 180.0;
    case 14:
      return (l12 + 2.0) * (l34 + 2.0) *
             (3.0 - l23 + l14 + 3.0 * l14 * l23 + 2.0 * l13 * l24) / 180.0;
    default:
      throw std::invalid_argument("rho4 coefficients tabulated for k = 9..14 only");
  }
}

cplx denom4(const C4& v) {
  return lam(v, 1, 3) * lam(v, 1, 4) * lam(v, 2, 3) * lam(v, 2, 4);
}
cplx A1_fn(int k, const C4& v) { return Q1_fn(k, v) / denom4(v); }
cplx B1_fn(int k, const C4& v) { return Q2_fn(k, v) / denom4(v); }

// A_2..A_6 and B_2, B_3: argument-permuted A_1/B_1 plus the tabulated corrections.
std::array<cplx, 6> A_coeffs(int k, const C4& v) {
  cplx l12 = lam(v, 1, 2), l13 = lam(v, 1, 3), l14 = lam(v, 1, 4);
  cplx l23 = lam(v, 2, 3), l24 = lam(v, 2, 4), l34 = lam(v, 3, 4);
  std::array<cplx, 6> A;
  A[0] = A1_fn(k, v);
  cplx A2 = A1_fn(k, perm(v, 1, 3, 2, 4));
  cplx A3 = A1_fn(k, perm(v, 1, 4, 3, 2));
  cplx A4 = A1_fn(k, perm(v, 3, 2, 1, 4));
  cplx A5 = A1_fn(k, perm(v, 4, 2, 3, 1));
  cplx A6 = A1_fn(k, perm(v, 4, 3, 2, 1));
  switch (k) {
    case 9:
      A2 += -1.0 / 6.0;
      A3 += -(1.0 - 1.0 / (l13 * l34)) / 6.0;
      A4 += -(1.0 - 1.0 / (l23 * l24) + 1.0 / (l23 * l34)) / 6.0;
      break;
    case 10:
      A2 += 1.0 / 6.0;
      A3 += 1.0 / 6.0;
      A4 += 1.0 / 3.0;
      A5 += 1.0 / 6.0;
      A6 += 1.0 / 6.0;
      break;
    case 11:
      A2 += -(2.0 - l12 * l13) / (12.0 * l12 * l14 * l34);
      A3 += -(l12 - 1.0) * (2.0 + l13 - l34 - 2.0 * l13 * l34) / (24.0 * l12 * l13 * l34);
      A4 += -(l12 - 1.0) * (l23 + 2.0) / (24.0 * l12 * l24 * l34);
      A6 += (2.0 - l24 * l34) / (12.0 * l13 * l14 * l24);
      break;
    case 12:
      A3 += -(l12 - 1.0) * (2.0 - l13 + l34 - 2.0 * l13 * l34) / (24.0 * l12 * l13 * l34);
      A4 += -(l12 + 1.0) * (l23 + 2.0) / (24.0 * l12 * l24 * l34);
      break;
    case 13:
      A3 += -(l12 + 1.0) * (2.0 + l13 - l34 - 2.0 * l13 * l34) / (24.0 * l12 * l13 * l34);
      A4 += (l12 - 1.0) * (l23 - 2.0) / (24.0 * l12 * l24 * l34);
      break;
    case 14:
      A2 += (2.0 - l12 * l13) / (12.0 * l12 * l14 * l34);
      A3 += -(l12 + 1.0) * (2.0 - l13 + l34 - 2.0 * l13 * l34) / (24.0 * l12 * l13 * l34);
      A4 += (l12 + 1.0) * (l23 - 2.0) / (24.0 * l12 * l24 * l34);
      A6 += -(2.0 - l24 * l34) / (12.0 * l13 * l14 * l24);
      break;
    default:
      throw std::invalid_argument("rho4 coefficients tabulated for k = 9..14 only");
  }
  A[1] = A2; A[2] = A3; A[3] = A4; A[4] = A5; A[5] = A6;
  return A;
}

std::array<cplx, 3> B_coeffs(int k, const C4& v) {
  cplx l12 = lam(v, 1, 2), l13 = lam(v, 1, 3), l14 = lam(v, 1, 4);
  cplx l23 = lam(v, 2, 3), l24 = lam(v, 2, 4), l34 = lam(v, 3, 4);
  std::array<cplx, 3> B;
  B[0] = B1_fn(k, v);
  cplx B2 = B1_fn(k, perm(v, 1, 3, 2, 4));
  cplx B3 = B1_fn(k, perm(v, 1, 4, 3, 2));
  cplx u = 2.0 - l14 * l23 + l12 * l34;
  cplx w = 2.0 - l13 * l24 - l12 * l34;
  switch (k) {
    case 9:
      B2 += -u / (18.0 * l12 * l34);
      B3 += w / (18.0 * l12 * l34);
      break;
    case 10:
      B2 += u / (18.0 * l12 * l34);
      B3 += -w / (18.0 * l12 * l34);
      break;
    case 11:
      B2 += -u / (18.0 * l12 * l14 * l34);
      B3 += w / (36.0 * l12 * l34);
      break;
    case 12:
      B3 += -(l13 - 2.0) * w / (36.0 * l12 * l13 * l34);
      break;
    case 13:
      B3 += -(l13 + 2.0) * w / (36.0 * l12 * l13 * l34);
      break;
    case 14:
      B2 += u / (18.0 * l12 * l14 * l34);
      B3 += w / (36.0 * l12 * l34);
      break;
    default:
      throw std::invalid_argument("rho4 coefficients tabulated for k = 9..14 only");
  }
  B[1] = B2; B[2] = B3;
  return B;
}

double jet_at(const JetOrders& jet, int m, int n) {
  auto it = jet.find({m, n});
  if (it == jet.end()) throw std::invalid_argument("jet is missing a required order");
  return it->second;
}

} // namespace

Matrix d2_xxx(cplx w) {
  Matrix D = (0.25 - w / 6.0) * Matrix::Identity(4, 4);
  D += (w / 3.0) * permutation_op(2, 0, 1);
  return D;
}

Matrix permutation_op(int n, int i, int j) {
  const long dim = 1L << n;
  Matrix P = Matrix::Zero(dim, dim);
  for (long s = 0; s < dim; ++s) {
    int bi = int((s >> (n - 1 - i)) & 1), bj = int((s >> (n - 1 - j)) & 1);
    long t = s;
    if (bi != bj) t = s ^ (1L << (n - 1 - i)) ^ (1L << (n - 1 - j));
    P(t, s) = 1.0;
  }
  return P;
}

std::array<cplx, 5> rho3_coefficients(cplx w12, cplx w13, cplx w23,
                                      cplx l1, cplx l2, cplx l3, Rho5Bracket variant) {
  cplx l12 = l1 - l2, l13 = l1 - l3, l23 = l2 - l3;
  std::array<cplx, 5> r;
  r[0] = 0.125 - (1.0 - 1.0 / (l13 * l23)) * w12 / 12.0 +
         (1.0 - 1.0 / (l12 * l23)) * w13 / 12.0 - (1.0 - 1.0 / (l12 * l13)) * w23 / 12.0;
  r[1] = (1.0 - 1.0 / (l13 * l23)) * w12 / 6.0 - (1.0 - 1.0 / (l12 * l23)) * w13 / 6.0 -
         w23 / (6.0 * l12 * l13);
  r[2] = -w12 / (6.0 * l13 * l23) - (1.0 - 1.0 / (l12 * l23)) * w13 / 6.0 +
         (1.0 - 1.0 / (l12 * l13)) * w23 / 6.0;
  r[3] = ((2.0 - l12) / (l13 * l23)) * w12 / 12.0 +
         (2.0 - 2.0 / (l12 * l23) - 1.0 / l12 + 1.0 / l23) * w13 / 12.0 +
         (2.0 / (l12 * l13) + 1.0 / l12 - 1.0 / l13) * w23 / 12.0;
  cplx bracket51 = (variant == Rho5Bracket::trace_consistent)
                       ? (2.0 + l12) / (l13 * l23)
                       : (1.0 / l23 - 1.0 / l13); // the tabulated terms cancel
  r[4] = bracket51 * w12 / 12.0 +
         (2.0 - 2.0 / (l12 * l23) + 1.0 / l12 - 1.0 / l23) * w13 / 12.0 +
         (2.0 / (l12 * l13) - 1.0 / l12 + 1.0 / l13) * w23 / 12.0;
  return r;
}

Matrix d3_xxx(const OmegaProvider& omega, cplx l1, cplx l2, cplx l3) {
  require_distinct({l1, l2, l3});
  auto r = rho3_coefficients(omega.evaluate(l1, l2), omega.evaluate(l1, l3),
                             omega.evaluate(l2, l3), l1, l2, l3);
  Matrix P12 = permutation_op(3, 0, 1), P23 = permutation_op(3, 1, 2);
  // rho4 multiplies the matrix product P12 P23 and rho5 the product P23 P12;
  // the assignment is pinned by the L=8 exact-diagonalization block (their
  // sum, the only combination entering the chain matrices, is unaffected)
  return r[0] * Matrix::Identity(8, 8) + r[1] * P12 + r[2] * P23 +
         r[3] * P12 * P23 + r[4] * P23 * P12;
}

cplx omega3_fn(const OmegaProvider& omega, cplx l1, cplx l2, cplx l3) {
  bool eq12 = std::abs(l1 - l2) < kCoincident;
  bool eq13 = std::abs(l1 - l3) < kCoincident;
  bool eq23 = std::abs(l2 - l3) < kCoincident;
  if (eq12 && eq13 && eq23) return omega3_homogeneous(omega.jet);
  if (eq12 || eq13 || eq23)
    throw std::domain_error("partially coincident spectral points: only the fully coincident limit is defined");
  cplx l12 = l1 - l2, l13 = l1 - l3, l23 = l2 - l3;
  return omega.evaluate(l1, l2) / (l13 * l23) +
         omega.evaluate(l1, l3) * (1.0 - 1.0 / (l12 * l23)) +
         omega.evaluate(l2, l3) / (l12 * l13);
}

cplx rho4_coefficient(int k, const OmegaProvider& omega, cplx l1, cplx l2, cplx l3, cplx l4) {
  require_distinct({l1, l2, l3, l4});
  C4 v{l1, l2, l3, l4};
  auto A = A_coeffs(k, v);
  auto B = B_coeffs(k, v);
  cplx w12 = omega.evaluate(l1, l2), w13 = omega.evaluate(l1, l3),
       w14 = omega.evaluate(l1, l4), w23 = omega.evaluate(l2, l3),
       w24 = omega.evaluate(l2, l4), w34 = omega.evaluate(l3, l4);
  // p0^(k) = 0 for every k > 1
  return A[0] * w12 + A[1] * w13 + A[2] * w14 + A[3] * w23 + A[4] * w24 + A[5] * w34 +
         B[0] * w12 * w34 + B[1] * w13 * w24 + B[2] * w14 * w23;
}

std::array<cplx, 4> omega4_fns(const OmegaProvider& omega, cplx l1, cplx l2, cplx l3, cplx l4) {
  bool all_zero = std::abs(l1) < kCoincident && std::abs(l2) < kCoincident &&
                  std::abs(l3) < kCoincident && std::abs(l4) < kCoincident;
  if (all_zero) {
    auto h = omega4_homogeneous(omega.jet);
    return {h[0], h[1], h[2], h[3]};
  }
  require_distinct({l1, l2, l3, l4});
  cplx r9 = rho4_coefficient(9, omega, l1, l2, l3, l4);
  cplx r10 = rho4_coefficient(10, omega, l1, l2, l3, l4);
  cplx r11 = rho4_coefficient(11, omega, l1, l2, l3, l4);
  cplx r12 = rho4_coefficient(12, omega, l1, l2, l3, l4);
  cplx r13 = rho4_coefficient(13, omega, l1, l2, l3, l4);
  cplx r14 = rho4_coefficient(14, omega, l1, l2, l3, l4);
  cplx O1 = 2.0 * (r11 + r12 + r13 + r14);
  cplx O2 = 4.0 * (r9 + r10) + O1;
  cplx O3 = 2.0 * (-r11 + r12 + r13 - r14);
  cplx O4 = (-4.0 * omega.evaluate(l1, l2) + 6.0 * omega.evaluate(l2, l3)) / 3.0;
  return {O1, O2, O3, O4};
}

double omega3_homogeneous(const JetOrders& jet) {
  return jet_at(jet, 0, 0) + jet_at(jet, 1, 1) - 0.5 * jet_at(jet, 2, 0);
}

std::array<double, 4> omega4_homogeneous(const JetOrders& jet) {
  double w00 = jet_at(jet, 0, 0), w10 = jet_at(jet, 1, 0), w11 = jet_at(jet, 1, 1);
  double w20 = jet_at(jet, 2, 0), w21 = jet_at(jet, 2, 1), w22 = jet_at(jet, 2, 2);
  double w30 = jet_at(jet, 3, 0), w31 = jet_at(jet, 3, 1);
  double O1 = w00 * (2.0 / 3 + 4.0 / 3 * w11 + 2.0 / 9 * w22 - 4.0 / 27 * w31) -
              w10 * (4.0 / 3 * w10 + 4.0 / 9 * w21 - 4.0 / 27 * w30) - w31 / 9.0 +
              (4.0 * w11 - 2.0 * w20) * (1.0 / 3 + w20 / 9.0) + w22 / 6.0;
  double O2 = w00 * (4.0 / 5 * w00 + 8.0 / 15 * w11 + 7.0 / 45 * w22 - 14.0 / 135 * w31) -
              w10 * (8.0 / 15 * w10 + 14.0 / 45 * w21 - 14.0 / 135 * w30) +
              w11 * (2.0 / 5 + 14.0 / 45 * w20) - w20 * (4.0 / 15 + 7.0 / 45 * w20) +
              2.0 / 15 * w22 - 4.0 / 45 * w31;
  double O3 = w00 * (4.0 / 15 * w00 + 2.0 / 5 * w11 + 4.0 / 45 * w22 - 8.0 / 135 * w31) -
              w10 * (2.0 / 5 * w10 + 8.0 / 45 * w21 - 8.0 / 135 * w30) +
              w11 * (7.0 / 15 + 8.0 / 45 * w20) - w20 * (1.0 / 5 + 4.0 / 45 * w20) -
              w31 / 15.0 + w22 / 10.0;
  double O4 = 2.0 / 3 * w00;
  return {O1, O2, O3, O4};
}

const std::array<const char*, 5> CorrelatorTable::kTableColumns = {
    "x1", "x1x2", "x1x2x3", "x1x3", "y1y3"};
const std::array<const char*, 8> CorrelatorTable::kAllNames = {
    "x1", "x1x2", "x1x2x3", "x1x3", "y1y3", "z1z3", "yxy", "zxz"};

CorrelatorTable correlators_from_jet(const JetOrders& jet, long length) {
  CorrelatorTable t;
  t.length = length;
  double w00 = jet_at(jet, 0, 0);
  auto o4 = omega4_homogeneous(jet);
  t.entries["x1"] = 2.0 / 3 * w00;
  t.entries["x1x2"] = 2.0 / 3 * omega3_homogeneous(jet);
  t.entries["x1x2x3"] = o4[0];
  t.entries["x1x3"] = o4[1];
  t.entries["y1y3"] = o4[2];
  t.entries["z1z3"] = o4[3]; // = <sx_1>
  t.entries["yxy"] = -t.entries["y1y3"];
  t.entries["zxz"] = -t.entries["z1z3"];
  return t;
}

Matrix assemble_irf(const Matrix& block) {
  const long half = block.rows();
  if (block.cols() != half || half < 2 || (half & (half - 1)) != 0)
    throw std::invalid_argument("block must be square with power-of-two dimension");
  if (std::abs(block.trace() - 1.0) > 1e-10)
    throw std::invalid_argument("block must have unit trace");
  int n = 0;
  while ((1L << n) < half) ++n;
  std::vector<long> perm;
  {
    // local copy of the direct-sum permutation (block label, spin-lex)
    perm.resize(2 * half);
    for (int blk = 0; blk < 2; ++blk)
      for (long s = 0; s < half; ++s) {
        long heights = blk;
        int prev = blk;
        for (int i = 0; i < n; ++i) {
          int si = int((s >> (n - 1 - i)) & 1);
          int next = si ^ blk ^ prev;
          heights = (heights << 1) | next;
          prev = next;
        }
        perm[(long(blk) << n) | s] = heights;
      }
  }
  Matrix out = Matrix::Zero(2 * half, 2 * half);
  for (long i = 0; i < half; ++i)
    for (long j = 0; j < half; ++j) {
      out(perm[i], perm[j]) = 0.5 * block(i, j);
      out(perm[half + i], perm[half + j]) = 0.5 * block(i, j);
    }
  return out;
}

Matrix chain_d1(cplx w) {
  Matrix D(2, 2);
  D << 0.5, w / 3.0, w / 3.0, 0.5;
  return D;
}

Matrix chain_d2(cplx w12, cplx w23, cplx o3) {
  Matrix D(4, 4);
  cplx a = 0.25, b = w23 / 6.0, c = w12 / 6.0, d = o3 / 6.0;
  D << a, b, c, d,
       b, a, d, c,
       c, d, a, b,
       d, c, b, a;
  return D;
}

} // namespace irf6v
