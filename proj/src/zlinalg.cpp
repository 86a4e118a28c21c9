#include "pgb/zlinalg.hpp"

#include <utility>

#include "pgb/errors.hpp"

namespace pgb {
namespace {

// row(i) -= q * row(r), touching columns >= from.
void sub_row(IntMat& M, Index i, Index r, const Integer& q, Index from) {
  if (q == 0) return;
  for (Index k = from; k < M.cols(); ++k) {
    if (M(r, k) != 0) M(i, k) -= q * M(r, k);
  }
}

void swap_rows(IntMat& M, Index a, Index b) {
  if (a != b) M.row(a).swap(M.row(b));
}

// In-place echelonization. If U is given it receives the same row operations.
// Returns the rank; rows [0, rank) are the canonical HNF afterwards.
Index echelonize(IntMat& H, IntMat* U) {
  const Index m = H.rows();
  const Index n = H.cols();
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    bool have_pivot = false;
    for (;;) {
      Index piv = -1;
      for (Index i = r; i < m; ++i) {
        if (H(i, c) == 0) continue;
        if (piv < 0 || abs(H(i, c)) < abs(H(piv, c))) piv = i;
      }
      if (piv < 0) break;
      have_pivot = true;
      swap_rows(H, piv, r);
      if (U) swap_rows(*U, piv, r);
      bool clean = true;
      for (Index i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Integer q = floor_div(H(i, c), H(r, c));
        sub_row(H, i, r, q, c);
        if (U) sub_row(*U, i, r, q, 0);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (H(r, c) < 0) {
      H.row(r) = -H.row(r);
      if (U) U->row(r) = -U->row(r);
    }
    for (Index i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      sub_row(H, i, r, q, c);
      if (U) sub_row(*U, i, r, q, 0);
    }
    ++r;
  }
  return r;
}

Index pivot_column(const IntMat& H, Index row) {
  for (Index k = 0; k < H.cols(); ++k) {
    if (H(row, k) != 0) return k;
  }
  return -1;
}

}  // namespace

HnfResult hnf(const IntMat& A) {
  IntMat H = A;
  Index rank = echelonize(H, nullptr);
  return {H.topRows(rank), rank};
}

HnfTransform hnf_with_transform(const IntMat& A) {
  HnfTransform out;
  out.H = A;
  out.U = IntMat::Identity(A.rows(), A.rows());
  out.rank = echelonize(out.H, &out.U);
  return out;
}

std::optional<IntVec> solve_echelon(const IntMat& H, const IntVec& b) {
  if (b.size() != H.cols()) throw DomainError("dimension mismatch");
  IntVec v = b;
  IntVec x = IntVec::Zero(H.rows());
  Index prev = -1;
  for (Index k = 0; k < H.rows(); ++k) {
    const Index p = pivot_column(H, k);
    for (Index j = prev + 1; j < p; ++j) {
      if (v(j) != 0) return std::nullopt;
    }
    if (v(p) != 0) {
      if (!mpz_divisible_p(v(p).get_mpz_t(), H(k, p).get_mpz_t())) return std::nullopt;
      x(k) = v(p) / H(k, p);
      for (Index j = p; j < H.cols(); ++j) {
        if (H(k, j) != 0) v(j) -= x(k) * H(k, j);
      }
    }
    prev = p;
  }
  for (Index j = prev + 1; j < v.size(); ++j) {
    if (v(j) != 0) return std::nullopt;
  }
  return x;
}

bool in_row_lattice(const IntMat& H, const IntVec& b) {
  return solve_echelon(H, b).has_value();
}

std::optional<IntVec> solve_in_rowspace(const IntMat& A, const IntVec& b) {
  if (b.size() != A.cols()) throw DomainError("dimension mismatch");
  HnfTransform t = hnf_with_transform(A);
  auto y = solve_echelon(t.H.topRows(t.rank), b);
  if (!y) return std::nullopt;
  IntVec x = IntVec::Zero(A.rows());
  for (Index k = 0; k < t.rank; ++k) {
    if ((*y)(k) == 0) continue;
    for (Index j = 0; j < A.rows(); ++j) {
      if (t.U(k, j) != 0) x(j) += (*y)(k) * t.U(k, j);
    }
  }
  return x;
}

IntMat kernel(const IntMat& A) {
  HnfTransform t = hnf_with_transform(A);
  IntMat K = t.U.bottomRows(A.rows() - t.rank);
  return hnf(K).H;
}

IntMat lattice_intersect(const IntMat& A, const IntMat& B) {
  if (A.cols() != B.cols()) throw DomainError("dimension mismatch");
  IntMat C(A.rows() + B.rows(), A.cols());
  C << A, B;
  IntMat K = kernel(C);
  IntMat V = IntMat::Zero(K.rows(), A.cols());
  for (Index r = 0; r < K.rows(); ++r) {
    for (Index i = 0; i < A.rows(); ++i) {
      if (K(r, i) == 0) continue;
      for (Index j = 0; j < A.cols(); ++j) V(r, j) += K(r, i) * A(i, j);
    }
  }
  return hnf(V).H;
}

Integer triangular_det(const IntMat& H) {
  Integer d = 1;
  for (Index i = 0; i < H.rows(); ++i) d *= H(i, i);
  return d;
}

Integer content(const IntMat& A) {
  Integer g = 0;
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      if (A(i, j) != 0) g = gcd(g, A(i, j));
      if (g == 1) return g;
    }
  }
  return g;
}

IntMat hnf_modular(const IntMat& A, const Integer& D) {
  const Index n = A.cols();
  IntMat W = A;
  for (Index i = 0; i < W.rows(); ++i) {
    for (Index j = 0; j < n; ++j) W(i, j) = W(i, j) % D;
  }
  IntMat H = IntMat::Zero(n, n);
  Integer modulus = D;
  Index live = W.rows();
  for (Index c = 0; c < n; ++c) {
    // Collect the gcd of column c into one working row.
    Index piv = -1;
    for (;;) {
      piv = -1;
      for (Index i = 0; i < live; ++i) {
        if (W(i, c) == 0) continue;
        if (piv < 0 || abs(W(i, c)) < abs(W(piv, c))) piv = i;
      }
      if (piv < 0) break;
      bool clean = true;
      for (Index i = 0; i < live; ++i) {
        if (i == piv || W(i, c) == 0) continue;
        Integer q = floor_div(W(i, c), W(piv, c));
        sub_row(W, i, piv, q, c);
        if (W(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    IntVec row = IntVec::Zero(n);
    Integer g = 0;
    if (piv >= 0) {
      row = W.row(piv);
      g = row(c);
      swap_rows(W, piv, live - 1);
      --live;
    }
    // pivot = gcd(g, modulus) = s*g + t*modulus
    Integer h, s, t;
    mpz_gcdext(h.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               modulus.get_mpz_t());
    if (sgn(h) < 0) {
      h = -h;
      s = -s;
    }
    const Integer next_modulus = modulus / h;
    for (Index j = 0; j < n; ++j) H(c, j) = 0;
    H(c, c) = h;
    for (Index j = c + 1; j < n; ++j) {
      Integer e = s * row(j);
      mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), next_modulus.get_mpz_t());
      H(c, j) = e;
    }
    modulus = next_modulus;
    for (Index i = 0; i < live; ++i) {
      for (Index j = c + 1; j < n; ++j) W(i, j) = W(i, j) % modulus;
    }
  }
  for (Index c = 0; c < n; ++c) {
    for (Index i = 0; i < c; ++i) {
      Integer q = floor_div(H(i, c), H(c, c));
      sub_row(H, i, c, q, c);
    }
  }
  return H;
}

std::optional<RatMat> rational_inverse(const RatMat& A) {
  const Index n = A.rows();
  if (A.cols() != n) throw DomainError("dimension mismatch");
  RatMat M = A;
  RatMat inv = RatMat::Identity(n, n);
  for (Index c = 0; c < n; ++c) {
    Index piv = -1;
    for (Index i = c; i < n; ++i) {
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    M.row(c).swap(M.row(piv));
    inv.row(c).swap(inv.row(piv));
    const Rational s = 1 / M(c, c);
    M.row(c) *= s;
    inv.row(c) *= s;
    for (Index i = 0; i < n; ++i) {
      if (i == c || M(i, c) == 0) continue;
      const Rational f = M(i, c);
      M.row(i) -= f * M.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

Rational rational_det(const RatMat& A) {
  const Index n = A.rows();
  if (A.cols() != n) throw DomainError("dimension mismatch");
  RatMat M = A;
  Rational det = 1;
  for (Index c = 0; c < n; ++c) {
    Index piv = -1;
    for (Index i = c; i < n; ++i) {
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      M.row(c).swap(M.row(piv));
      det = -det;
    }
    det *= M(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (M(i, c) == 0) continue;
      const Rational f = M(i, c) / M(c, c);
      M.row(i) -= f * M.row(c);
    }
  }
  return det;
}

}  // namespace pgb
