#ifndef IRF6V_FACE_MODEL_HPP
#define IRF6V_FACE_MODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace irf6v {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Heights are +1/-1. Basis ordering ("height-lex"): configurations of L
// heights are indexed lexicographically with + < -, height 1 as the most
// significant digit. All modules share this ordering.
inline int height_bit(long index, int site, int L) {          // site 0-based
  return int((index >> (L - 1 - site)) & 1);                  // 0 = '+'
}
inline int bit_to_height(int bit) { return bit ? -1 : +1; }

struct LatticeOperator {
  Matrix matrix;
  std::string basis_tag = "height-lex";
};

// Boltzmann weight of one face with corners (a,b,c,d) = (SW,SE,NE,NW),
// each +1 or -1:
//   a-patterns -> lambda+1, b-patterns -> lambda, c-patterns -> 1,
//   anything else -> 0.
cplx face_weight(int a, int b, int c, int d, cplx lambda);

// Max |lhs-rhs| of the face Yang-Baxter identity over all 2^6 external
// height assignments, summing the internal height.
double yang_baxter_residual(cplx lambda, cplx mu);

// Periodic row-to-row transfer matrix on 2^L height configurations:
// T^a_b = prod_i W(b_i, b_{i+1}, a_{i+1}, a_i; lambda - u_i).
// Rejects odd L and L < 4.
LatticeOperator transfer_matrix(int L, cplx lambda, const std::vector<cplx>& inhomogeneities);

// y = T(lambda) x without materializing T; cost O(L 2^L).
Vector transfer_apply(int L, cplx lambda, const std::vector<cplx>& u, const Vector& x);

// Monodromy matrix element T^{al be}_{alp bep}(lambda) applied to a vector.
// Boundary pins: a_1 = al, a_{L+1} = be (upper row), b_1 = alp,
// b_{L+1} = bep (lower row); heights given as bits (0='+').
Vector monodromy_apply(int L, cplx lambda, const std::vector<cplx>& u,
                       int al, int be, int alp, int bep, const Vector& x);

// H = 1/2 sum_i (sx_i - sz_{i-1} sx_i sz_{i+1} + sz_{i-1} sz_{i+1} + 1),
// periodic. Dense; L <= 12. Equals d/dlambda log T(lambda) at lambda=u=0.
LatticeOperator hamiltonian_irf(int L);

// Matrix-free H x (used by the Lanczos ground-state search).
Vector hamiltonian_apply(int L, const Vector& x);

// (Sigma^z, Pi^x) with Sigma^z = sum_j sz_j sz_{j+1} and Pi^x = prod_j sx_j.
std::pair<LatticeOperator, LatticeOperator> symmetry_operators(int L);

// Single-site Pauli matrix as a dense operator (site 0-based).
Matrix pauli_operator(int L, int site, char which); // 'x','y','z'

void require_even_length(int L, int min_L = 4);

} // namespace irf6v

#endif
