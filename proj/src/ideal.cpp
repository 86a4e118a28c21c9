#include <algorithm>

#include "pgb/errors.hpp"
#include "pgb/numberfield.hpp"
#include "pgb/zlinalg.hpp"

namespace pgb {
namespace {

// Stacks rational coordinate rows over a common denominator.
std::pair<IntMat, Integer> integer_rows(const std::vector<RatVec>& rows, Index d) {
  Integer den = 1;
  for (const auto& r : rows) den = lcm(den, common_denominator(r));
  IntMat M(static_cast<Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) M.row(static_cast<Index>(i)) = scale_to_integer(rows[i], den);
  return {std::move(M), den};
}

IntMat scaled(const IntMat& M, const Integer& s) {
  if (s == 1) return M;
  IntMat out = M;
  for (Index i = 0; i < out.rows(); ++i) {
    for (Index j = 0; j < out.cols(); ++j) out(i, j) *= s;
  }
  return out;
}

std::size_t bit_size(const Integer& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t size_score(const FracIdeal& a) {
  std::size_t s = bit_size(a.den());
  for (Index i = 0; i < a.num().rows(); ++i) {
    for (Index j = 0; j < a.num().cols(); ++j) s += bit_size(a.num()(i, j));
  }
  return s;
}

}  // namespace

FracIdeal FracIdeal::from_lattice(const FieldPtr& K, const IntMat& rows, const Integer& den) {
  if (den == 0) throw DomainError("division by zero");
  HnfResult h = hnf(rows);
  if (h.rank != K->degree()) throw DomainError("zero ideal", "lattice is not of full rank");
  FracIdeal out;
  out.field_ = K;
  Integer g = gcd(content(h.H), den);
  if (sgn(den) < 0) g = -g;
  if (g != 1) {
    for (Index i = 0; i < h.H.rows(); ++i) {
      for (Index j = 0; j < h.H.cols(); ++j) h.H(i, j) /= abs(g);
    }
  }
  out.num_ = std::move(h.H);
  out.den_ = den / g;
  return out;
}

FracIdeal FracIdeal::from_lattice_checked(const FieldPtr& K, const IntMat& rows,
                                          const Integer& den) {
  FracIdeal a = from_lattice(K, rows, den);
  for (Index i = 0; i < a.num_.rows(); ++i) {
    FieldElem x(K, to_rational(a.num_.row(i)));
    for (int k = 0; k < K->degree(); ++k) {
      RatVec y = x.coords() * K->mult_table(k);
      if (!y.isZero() && !in_row_lattice(a.num_, scale_to_integer(y, 1)))
        throw DomainError("not an ideal", "lattice is not closed under multiplication by R");
    }
  }
  return a;
}

FracIdeal FracIdeal::unit(const FieldPtr& K) {
  return from_lattice(K, IntMat::Identity(K->degree(), K->degree()), 1);
}

bool FracIdeal::is_unit() const { return den_ == 1 && num_.isIdentity(); }

FieldElem FracIdeal::basis_element(Index i) const {
  RatVec c(num_.cols());
  for (Index j = 0; j < num_.cols(); ++j) c(j) = ratio(num_(i, j), den_);
  return {field_, c};
}

std::vector<FieldElem> FracIdeal::basis() const {
  std::vector<FieldElem> out;
  for (Index i = 0; i < num_.rows(); ++i) out.push_back(basis_element(i));
  return out;
}

bool operator==(const FracIdeal& a, const FracIdeal& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

FracIdeal ideal_from_generators(const FieldPtr& K, std::span<const FieldElem> gens) {
  std::vector<RatVec> rows;
  for (const auto& g : gens) {
    require_same_field(K, g.field());
    if (g.is_zero()) continue;
    RatMat M = g.mult_matrix();
    for (Index i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
  }
  if (rows.empty()) throw DomainError("zero ideal", "all generators are zero");
  auto [M, den] = integer_rows(rows, K->degree());
  return FracIdeal::from_lattice(K, M, den);
}

FracIdeal principal_ideal(const FieldElem& x) {
  return ideal_from_generators(x.field(), std::span<const FieldElem>(&x, 1));
}

FracIdeal ideal_scale(const FracIdeal& a, const FieldElem& x) {
  require_same_field(a.field(), x.field());
  if (x.is_zero()) throw DomainError("zero ideal");
  const FieldPtr& K = a.field();
  if (x.is_rational()) {
    const Rational q = x[0] / Rational(a.den());
    return FracIdeal::from_lattice(K, scaled(a.num(), abs(Integer(q.get_num()))),
                                   q.get_den());
  }
  std::vector<RatVec> rows;
  RatMat M = x.mult_matrix();
  for (Index i = 0; i < a.num().rows(); ++i) {
    rows.push_back(to_rational(a.num().row(i)) * M);
  }
  auto [N, den] = integer_rows(rows, K->degree());
  return FracIdeal::from_lattice(K, N, den * a.den());
}

FracIdeal ideal_add(const FracIdeal& a, const FracIdeal& b) {
  require_same_field(a.field(), b.field());
  const Integer D = lcm(a.den(), b.den());
  IntMat M(a.num().rows() + b.num().rows(), a.num().cols());
  M << scaled(a.num(), D / a.den()), scaled(b.num(), D / b.den());
  return FracIdeal::from_lattice(a.field(), M, D);
}

FracIdeal ideal_mul(const FracIdeal& a, const FracIdeal& b) {
  require_same_field(a.field(), b.field());
  const FieldPtr& K = a.field();
  const int d = K->degree();
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  IntMat M(d * d, d);
  for (int i = 0; i < d; ++i) {
    FieldElem x(K, to_rational(a.num().row(i)));
    RatMat Mx = x.mult_matrix();
    for (int j = 0; j < d; ++j) {
      RatVec y = to_rational(b.num().row(j)) * Mx;
      M.row(i * d + j) = scale_to_integer(y, 1);
    }
  }
  const Integer D = abs(triangular_det(a.num()) * triangular_det(b.num()));
  IntMat H = hnf_modular(M, D);
  return FracIdeal::from_lattice(K, H, a.den() * b.den());
}

FracIdeal ideal_pow(const FracIdeal& a, unsigned k) {
  FracIdeal result = FracIdeal::unit(a.field());
  FracIdeal base = a;
  while (k > 0) {
    if (k & 1u) result = ideal_mul(result, base);
    k >>= 1u;
    if (k > 0) base = ideal_mul(base, base);
  }
  return result;
}

FracIdeal ideal_inverse(const FracIdeal& a) {
  const FieldPtr& K = a.field();
  const int d = K->degree();
  // (R : A) for the integral numerator A is the dual of the lattice spanned
  // by the columns of [M_{alpha_1} | ... | M_{alpha_d}].
  IntMat cols(d * d, d);
  for (int j = 0; j < d; ++j) {
    FieldElem alpha(K, to_rational(a.num().row(j)));
    RatMat Mj = alpha.mult_matrix();
    for (int c = 0; c < d; ++c) {
      for (int i = 0; i < d; ++i) cols(j * d + c, i) = Rational(Mj(i, c)).get_num();
    }
  }
  IntMat B = hnf(cols).H;
  RatMat Bq(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) Bq(i, j) = Rational(B(i, j));
  }
  auto Binv = rational_inverse(Bq);
  if (!Binv) throw DomainError("zero ideal");
  std::vector<RatVec> rows;
  RatMat dual = Binv->transpose();
  for (int i = 0; i < d; ++i) rows.push_back(dual.row(i));
  auto [M, den] = integer_rows(rows, d);
  // (num/den)^-1 = den * (R : num)
  const Integer g = gcd(den, a.den());
  return FracIdeal::from_lattice(K, scaled(M, a.den() / g), den / g);
}

FracIdeal ideal_intersect(const FracIdeal& a, const FracIdeal& b) {
  require_same_field(a.field(), b.field());
  if (a == b) return a;
  const Integer D = lcm(a.den(), b.den());
  IntMat M = lattice_intersect(scaled(a.num(), D / a.den()), scaled(b.num(), D / b.den()));
  return FracIdeal::from_lattice(a.field(), M, D);
}

bool ideal_contains(const FracIdeal& a, const FracIdeal& b) {
  require_same_field(a.field(), b.field());
  const Integer D = lcm(a.den(), b.den());
  const IntMat A = scaled(a.num(), D / a.den());
  const Integer sb = D / b.den();
  for (Index i = 0; i < b.num().rows(); ++i) {
    IntVec v = b.num().row(i);
    if (sb != 1) v *= sb;
    if (!in_row_lattice(A, v)) return false;
  }
  return true;
}

bool elem_in_ideal(const FieldElem& x, const FracIdeal& a) {
  require_same_field(x.field(), a.field());
  RatVec v = x.coords() * Rational(a.den());
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).get_den() != 1) return false;
  }
  return in_row_lattice(a.num(), scale_to_integer(v, 1));
}

Rational ideal_norm(const FracIdeal& a) {
  Integer dd = 1;
  for (int i = 0; i < a.degree(); ++i) dd *= a.den();
  return ratio(abs(triangular_det(a.num())), dd);
}

std::vector<FieldElem> express_in_ideal_sum(
    const FieldElem& c, std::span<const std::pair<FracIdeal, FieldElem>> parts) {
  const FieldPtr& K = c.field();
  const int d = K->degree();
  std::vector<RatVec> rows;
  rows.reserve(parts.size() * d + 1);
  for (const auto& [ideal, ci] : parts) {
    require_same_field(K, ideal.field());
    require_same_field(K, ci.field());
    RatMat M = ci.mult_matrix();
    for (Index i = 0; i < ideal.num().rows(); ++i) {
      rows.push_back(to_rational(ideal.num().row(i)) * M / Rational(ideal.den()));
    }
  }
  rows.push_back(c.coords());
  auto [A, den] = integer_rows(rows, d);
  IntVec b = A.bottomRows(1);
  A.conservativeResize(A.rows() - 1, Eigen::NoChange);

  HnfTransform t = hnf_with_transform(A);
  auto y = solve_echelon(t.H.topRows(t.rank), b);
  if (!y) throw DomainError("not in sum");
  IntVec x = IntVec::Zero(A.rows());
  for (Index k = 0; k < t.rank; ++k) {
    if ((*y)(k) == 0) continue;
    x += (*y)(k) * t.U.row(k);
  }
  // Shorten the solution against the kernel lattice.
  if (t.rank < A.rows()) {
    IntMat Ker = hnf(t.U.bottomRows(A.rows() - t.rank)).H;
    for (Index r = 0; r < Ker.rows(); ++r) {
      Index p = 0;
      while (Ker(r, p) == 0) ++p;
      Integer q = centered_quotient(Rational(x(p)), Rational(Ker(r, p)));
      if (q != 0) x -= q * Ker.row(r);
    }
  }

  std::vector<FieldElem> out;
  Index row = 0;
  for (const auto& [ideal, ci] : parts) {
    RatVec a = RatVec::Zero(d);
    for (Index i = 0; i < ideal.num().rows(); ++i, ++row) {
      if (x(row) == 0) continue;
      a += Rational(x(row)) * to_rational(ideal.num().row(i));
    }
    out.emplace_back(K, a / Rational(ideal.den()));
  }
  return out;
}

FieldElem reduce_elem_mod_ideal(const FieldElem& alpha, const FracIdeal& m) {
  require_same_field(alpha.field(), m.field());
  RatVec w = alpha.coords() * Rational(m.den());
  const IntMat& H = m.num();
  for (Index i = 0; i < H.rows(); ++i) {
    const Integer q = centered_quotient(w(i), Rational(H(i, i)));
    if (q == 0) continue;
    for (Index j = i; j < H.cols(); ++j) w(j) -= Rational(q * H(i, j));
  }
  return {alpha.field(), w / Rational(m.den())};
}

SmallRep ideal_small_rep(const FracIdeal& a) {
  const FieldPtr& K = a.field();
  const Integer g = content(a.num());
  const FieldElem gamma0 = FieldElem::from_rational(K, ratio(g, a.den()));
  FracIdeal primitive = ideal_scale(a, elem_inv(gamma0));

  // Shortest HNF row of the primitive part as a candidate generator.
  Index best = 0;
  Integer best_len = -1;
  for (Index i = 0; i < primitive.num().rows(); ++i) {
    Integer len = 0;
    for (Index j = 0; j < primitive.num().cols(); ++j) len += primitive.num()(i, j) * primitive.num()(i, j);
    if (best_len < 0 || len < best_len) {
      best_len = len;
      best = i;
    }
  }
  FieldElem gamma1 = primitive.basis_element(best);
  if (!gamma1.is_one()) {
    FracIdeal candidate = ideal_scale(primitive, elem_inv(gamma1));
    if (size_score(candidate) < size_score(primitive)) {
      return {gamma0 * gamma1, std::move(candidate)};
    }
  }
  return {gamma0, std::move(primitive)};
}

}  // namespace pgb
