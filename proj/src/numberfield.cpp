#include "pgb/numberfield.hpp"

#include "pgb/errors.hpp"
#include "pgb/zlinalg.hpp"

namespace pgb {
namespace {

// Product of two power-basis vectors reduced modulo the monic minpoly.
RatVec power_basis_mul(const RatVec& p, const RatVec& q, const std::vector<Integer>& m) {
  const Index d = p.size();
  std::vector<Rational> prod(2 * d - 1);
  for (Index i = 0; i < d; ++i) {
    if (p(i) == 0) continue;
    for (Index j = 0; j < d; ++j) prod[i + j] += p(i) * q(j);
  }
  for (Index k = 2 * d - 2; k >= d; --k) {
    const Rational c = prod[k];
    if (c == 0) continue;
    // t^k = t^(k-d) * t^d and t^d = -sum_{i<d} m_i t^i
    for (Index i = 0; i < d; ++i) prod[k - d + i] -= c * Rational(m[i]);
    prod[k] = 0;
  }
  RatVec out(d);
  for (Index i = 0; i < d; ++i) out(i) = prod[i];
  return out;
}

}  // namespace

FieldPtr NumberField::create(std::vector<Integer> minpoly, std::optional<RatMat> basis) {
  if (minpoly.size() < 2) throw DomainError("invalid field", "minpoly must have degree >= 1");
  if (minpoly.back() != 1) throw DomainError("invalid field", "minpoly must be monic");
  std::shared_ptr<NumberField> K(new NumberField());
  const int d = static_cast<int>(minpoly.size()) - 1;
  K->degree_ = d;
  K->minpoly_ = std::move(minpoly);
  K->basis_ = basis ? *basis : RatMat(RatMat::Identity(d, d));
  if (K->basis_.rows() != d || K->basis_.cols() != d)
    throw DomainError("invalid field", "integral basis must be d x d");
  for (int j = 0; j < d; ++j) {
    if (K->basis_(0, j) != (j == 0 ? 1 : 0))
      throw DomainError("invalid field", "first integral basis element must be 1");
  }
  auto inv = rational_inverse(K->basis_);
  if (!inv) throw DomainError("invalid field", "integral basis is singular");
  K->basis_inv_ = *inv;

  const Rational det = rational_det(K->basis_);
  const Rational idx = abs(1 / det);
  if (idx.get_den() != 1) throw DomainError("invalid field", "basis does not contain Z[theta]");
  K->index_ = idx.get_num();

  K->table_.resize(d);
  for (int i = 0; i < d; ++i) {
    RatMat T(d, d);
    for (int j = 0; j < d; ++j) {
      RatVec prod = power_basis_mul(K->basis_.row(i), K->basis_.row(j), K->minpoly_);
      RatVec c = prod * K->basis_inv_;
      for (int k = 0; k < d; ++k) {
        if (c(k).get_den() != 1)
          throw DomainError("invalid field", "integral basis is not closed under multiplication");
      }
      T.row(j) = c;
    }
    K->table_[i] = std::move(T);
  }
  return K;
}

FieldPtr NumberField::rationals() {
  static const FieldPtr Z = create({Integer(0), Integer(1)});
  return Z;
}

RatVec NumberField::from_power_basis(const RatVec& p) const { return p * basis_inv_; }

RatVec NumberField::to_power_basis(const RatVec& coords) const { return coords * basis_; }

RatVec NumberField::theta_power(int k) const {
  RatVec p = RatVec::Zero(degree_);
  p(0) = 1;
  RatVec t = RatVec::Zero(degree_);
  if (degree_ == 1) {
    t(0) = Rational(-minpoly_[0]);
  } else {
    t(1) = 1;
  }
  for (int i = 0; i < k; ++i) p = power_basis_mul(p, t, minpoly_);
  return from_power_basis(p);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b) throw DomainError("field mismatch");
}

FieldElem::FieldElem(FieldPtr field, RatVec coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree()) throw DomainError("dimension mismatch");
}

FieldElem FieldElem::zero(const FieldPtr& K) { return {K, RatVec::Zero(K->degree())}; }

FieldElem FieldElem::one(const FieldPtr& K) { return from_rational(K, 1); }

FieldElem FieldElem::from_rational(const FieldPtr& K, const Rational& q) {
  RatVec c = RatVec::Zero(K->degree());
  c(0) = q;
  return {K, c};
}

FieldElem FieldElem::generator(const FieldPtr& K) { return {K, K->theta_power(1)}; }

bool FieldElem::is_zero() const {
  for (Index i = 0; i < coords_.size(); ++i) {
    if (coords_(i) != 0) return false;
  }
  return true;
}

bool FieldElem::is_rational() const {
  for (Index i = 1; i < coords_.size(); ++i) {
    if (coords_(i) != 0) return false;
  }
  return true;
}

bool FieldElem::is_one() const { return is_rational() && coords_(0) == 1; }

bool FieldElem::is_integral() const {
  for (Index i = 0; i < coords_.size(); ++i) {
    if (coords_(i).get_den() != 1) return false;
  }
  return true;
}

FieldElem FieldElem::operator-() const { return {field_, -coords_}; }

FieldElem& FieldElem::operator+=(const FieldElem& y) {
  require_same_field(field_, y.field_);
  coords_ += y.coords_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& y) {
  require_same_field(field_, y.field_);
  coords_ -= y.coords_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& y) { return *this = *this * y; }

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  require_same_field(x.field_, y.field_);
  const int d = x.field_->degree();
  if (d == 1) return {x.field_, RatVec::Constant(1, x.coords_(0) * y.coords_(0))};
  if (x.is_rational()) return {x.field_, x.coords_(0) * y.coords_};
  if (y.is_rational()) return {x.field_, y.coords_(0) * x.coords_};
  RatVec out = RatVec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x.coords_(i) == 0) continue;
    out += x.coords_(i) * (y.coords_ * x.field_->mult_table(i));
  }
  return {x.field_, out};
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * elem_inv(y); }

bool operator==(const FieldElem& x, const FieldElem& y) {
  return x.field_ == y.field_ && x.coords_ == y.coords_;
}

RatMat FieldElem::mult_matrix() const {
  const int d = field_->degree();
  RatMat M(d, d);
  for (int i = 0; i < d; ++i) M.row(i) = coords_ * field_->mult_table(i);
  return M;
}

FieldElem elem_add(const FieldElem& x, const FieldElem& y) { return x + y; }

FieldElem elem_mul(const FieldElem& x, const FieldElem& y) { return x * y; }

FieldElem elem_inv(const FieldElem& x) {
  if (x.is_zero()) throw DomainError("division by zero");
  if (x.is_rational()) return FieldElem::from_rational(x.field(), 1 / x[0]);
  // c * M = e_0 where row i of M is omega_i * x.
  auto inv = rational_inverse(x.mult_matrix());
  if (!inv) throw DomainError("division by zero");
  return {x.field(), inv->row(0)};
}

Rational elem_norm(const FieldElem& x) { return rational_det(x.mult_matrix()); }

}  // namespace pgb
