#include "irf6v/face_model.hpp"

#include <stdexcept>

namespace irf6v {

namespace {

// face class lookup, pattern = (a<<3)|(b<<2)|(c<<1)|d with bit 1 = '-'
enum : int { kA = 0, kB = 1, kC = 2, kZero = 3 };

const std::array<int, 16> kFaceClass = [] {
  std::array<int, 16> cls{};
  cls.fill(kZero);
  auto set = [&](int a, int b, int c, int d, int t) {
    cls[(a << 3) | (b << 2) | (c << 1) | d] = t;
  };
  set(0, 0, 0, 0, kA); set(1, 1, 1, 1, kA); set(1, 0, 1, 0, kA); set(0, 1, 0, 1, kA);
  set(0, 0, 1, 1, kB); set(1, 1, 0, 0, kB); set(0, 1, 1, 0, kB); set(1, 0, 0, 1, kB);
  set(0, 0, 0, 1, kC); set(1, 1, 1, 0, kC); set(0, 1, 0, 0, kC); set(1, 0, 1, 1, kC);
  return cls;
}();

inline cplx weight_bits(int a, int b, int c, int d, cplx lambda) {
  switch (kFaceClass[(a << 3) | (b << 2) | (c << 1) | d]) {
    case kA: return lambda + 1.0;
    case kB: return lambda;
    case kC: return 1.0;
    default: return 0.0;
  }
}

inline int to_bit(int height) {
  if (height != 1 && height != -1) throw std::invalid_argument("height must be +1 or -1");
  return height == 1 ? 0 : 1;
}

} // namespace

void require_even_length(int L, int min_L) {
  if (L < min_L || L % 2 != 0)
    throw std::invalid_argument("lattice length must be even and >= " + std::to_string(min_L));
}

cplx face_weight(int a, int b, int c, int d, cplx lambda) {
  return weight_bits(to_bit(a), to_bit(b), to_bit(c), to_bit(d), lambda);
}

double yang_baxter_residual(cplx lambda, cplx mu) {
  double worst = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f) {
              cplx lhs = 0.0, rhs = 0.0;
              for (int i = 0; i < 2; ++i) {
                lhs += weight_bits(a, b, i, f, lambda - mu) * weight_bits(i, d, e, f, mu) *
                       weight_bits(b, c, d, i, lambda);
                rhs += weight_bits(a, i, e, f, lambda) * weight_bits(b, c, i, a, mu) *
                       weight_bits(i, c, d, e, lambda - mu);
              }
              worst = std::max(worst, std::abs(lhs - rhs));
            }
  return worst;
}

LatticeOperator transfer_matrix(int L, cplx lambda, const std::vector<cplx>& u) {
  require_even_length(L);
  if (int(u.size()) != L) throw std::invalid_argument("need L inhomogeneities");
  if (L > 14) throw std::invalid_argument("dense transfer matrix limited to L <= 14");
  const long dim = 1L << L;
  LatticeOperator op;
  op.matrix.resize(dim, dim);
  for (long a = 0; a < dim; ++a)
    for (long b = 0; b < dim; ++b) {
      cplx w = 1.0;
      for (int i = 0; i < L && w != 0.0; ++i) {
        int ip = (i + 1) % L;
        w *= weight_bits(height_bit(b, i, L), height_bit(b, ip, L),
                         height_bit(a, ip, L), height_bit(a, i, L), lambda - u[i]);
      }
      op.matrix(a, b) = w;
    }
  return op;
}

// Sweep contraction for r[a] = sum_{c: c_1=alp} prod_i W(c_i, c_{i+1}, a_{i+1}, a_i) x[c]
// with c_{L+1} = bep, a_{L+1} = be; output supported on a_1 = al.
// State after face i: S_i[a_2..a_{i+1} ; c_{i+1}..c_L], flat layout
// [a-bits, newest lowest | c-bits, c_{i+1} highest], 2^L entries throughout.
Vector monodromy_apply(int L, cplx lambda, const std::vector<cplx>& u,
                       int al, int be, int alp, int bep, const Vector& x) {
  require_even_length(L);
  const long dim = 1L << L;
  if (x.size() != dim) throw std::invalid_argument("vector dimension mismatch");
  if (int(u.size()) != L) throw std::invalid_argument("need L inhomogeneities");

  std::vector<cplx> cur(dim, cplx(0)), nxt(dim);

  // face 1: c_1 pinned to alp, a_1 pinned to al, c_2 stays for face 2
  for (long crest = 0; crest < (1L << (L - 1)); ++crest) {
    int c2 = int((crest >> (L - 2)) & 1);
    cplx xv = x[(long(alp) << (L - 1)) | crest];
    if (xv == 0.0) continue;
    for (int a2 = 0; a2 < 2; ++a2) {
      cplx w = weight_bits(alp, c2, a2, al, lambda - u[0]);
      if (w != 0.0) cur[(long(a2) << (L - 1)) | crest] = w * xv;
    }
  }

  // faces 2..L-1: consume c_i, append a_{i+1}
  for (int i = 2; i <= L - 1; ++i) {
    const long na = i - 1;      // a-bits (a_2..a_i), a_i lowest
    const long nc = L - i + 1;  // c-bits (c_i..c_L), c_i highest
    const cplx wl = lambda - u[i - 1];
    std::fill(nxt.begin(), nxt.end(), cplx(0));
    for (long ab = 0; ab < (1L << na); ++ab) {
      const int ai = int(ab & 1);
      const cplx* src = cur.data() + (ab << nc);
      for (int an = 0; an < 2; ++an) {
        cplx* dst = nxt.data() + ((((ab << 1) | an) << (nc - 1)));
        for (long cb = 0; cb < (1L << (nc - 1)); ++cb) {
          int cn = int((cb >> (nc - 2)) & 1); // c_{i+1}
          cplx acc = weight_bits(0, cn, an, ai, wl) * src[cb] +
                     weight_bits(1, cn, an, ai, wl) * src[(1L << (nc - 1)) | cb];
          dst[cb] = acc;
        }
      }
    }
    cur.swap(nxt);
  }

  // face L: consume c_L against the pins (bep, be)
  Vector out = Vector::Zero(dim);
  const cplx wl = lambda - u[L - 1];
  for (long ab = 0; ab < (1L << (L - 1)); ++ab) {
    const int aL = int(ab & 1);
    cplx acc = weight_bits(0, bep, be, aL, wl) * cur[ab << 1] +
               weight_bits(1, bep, be, aL, wl) * cur[(ab << 1) | 1];
    out[(long(al) << (L - 1)) | ab] = acc;
  }
  return out;
}

Vector transfer_apply(int L, cplx lambda, const std::vector<cplx>& u, const Vector& x) {
  Vector y = Vector::Zero(x.size());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      y += monodromy_apply(L, lambda, u, a, a, b, b, x);
  return y;
}

Vector hamiltonian_apply(int L, const Vector& x) {
  require_even_length(L);
  const long dim = 1L << L;
  Vector y = Vector::Zero(dim);
  for (long s = 0; s < dim; ++s) {
    cplx v = x[s];
    if (v == 0.0) continue;
    double diag = 0.0;
    for (int i = 0; i < L; ++i) {
      int im = (i + L - 1) % L, ip = (i + 1) % L;
      int zz = (height_bit(s, im, L) ^ height_bit(s, ip, L)) ? -1 : 1;
      diag += 0.5 * (zz + 1);
      if (zz == -1) y[s ^ (1L << (L - 1 - i))] += v; // 0.5*(1 - zz) = 1
    }
    y[s] += diag * v;
  }
  return y;
}

LatticeOperator hamiltonian_irf(int L) {
  require_even_length(L);
  if (L > 12) throw std::invalid_argument("dense Hamiltonian limited to L <= 12");
  const long dim = 1L << L;
  LatticeOperator op;
  op.matrix = Matrix::Zero(dim, dim);
  for (long s = 0; s < dim; ++s) {
    Vector e = Vector::Zero(dim);
    e[s] = 1.0;
    op.matrix.col(s) = hamiltonian_apply(L, e);
  }
  return op;
}

Matrix pauli_operator(int L, int site, char which) {
  const long dim = 1L << L;
  Matrix P = Matrix::Zero(dim, dim);
  for (long s = 0; s < dim; ++s) {
    int bit = height_bit(s, site, L);
    switch (which) {
      case 'z': P(s, s) = bit ? -1.0 : 1.0; break;
      case 'x': P(s ^ (1L << (L - 1 - site)), s) = 1.0; break;
      case 'y': P(s ^ (1L << (L - 1 - site)), s) = bit ? cplx(0, -1) : cplx(0, 1); break;
      default: throw std::invalid_argument("pauli axis must be x, y or z");
    }
  }
  return P;
}

std::pair<LatticeOperator, LatticeOperator> symmetry_operators(int L) {
  require_even_length(L);
  const long dim = 1L << L;
  LatticeOperator sz, px;
  sz.matrix = Matrix::Zero(dim, dim);
  px.matrix = Matrix::Zero(dim, dim);
  const long all = dim - 1;
  for (long s = 0; s < dim; ++s) {
    double q = 0.0;
    for (int j = 0; j < L; ++j)
      q += (height_bit(s, j, L) ^ height_bit(s, (j + 1) % L, L)) ? -1.0 : 1.0;
    sz.matrix(s, s) = q;
    px.matrix(s ^ all, s) = 1.0;
  }
  return {sz, px};
}

} // namespace irf6v
