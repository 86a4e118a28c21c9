#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pgb/integer.hpp"

namespace pgb {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// K = Q(theta) with theta a root of a monic irreducible integer polynomial,
// together with a fixed Z-basis omega_0 = 1, ..., omega_{d-1} of the ring of
// integers R. All elements and ideals are stored in omega coordinates.
class NumberField {
 public:
  // `minpoly` holds the coefficients in ascending order, leading one last.
  // `basis` rows express omega_i in the power basis 1, theta, ...; identity
  // (R = Z[theta]) when omitted. Irreducibility is the caller's assertion.
  static FieldPtr create(std::vector<Integer> minpoly,
                         std::optional<RatMat> basis = std::nullopt);

  // Z, i.e. Q presented as Q(theta) with theta = 0.
  static FieldPtr rationals();

  int degree() const { return degree_; }
  const std::vector<Integer>& minpoly() const { return minpoly_; }
  const RatMat& basis_matrix() const { return basis_; }
  const RatMat& basis_inverse() const { return basis_inv_; }

  // omega_i * omega_j has coordinates mult_table(i).row(j).
  const RatMat& mult_table(int i) const { return table_[i]; }

  // [R : Z[theta]].
  const Integer& index() const { return index_; }

  // Power-basis coefficient vector -> omega coordinates and back.
  RatVec from_power_basis(const RatVec& p) const;
  RatVec to_power_basis(const RatVec& coords) const;

  // theta^k in omega coordinates.
  RatVec theta_power(int k) const;

 private:
  NumberField() = default;

  int degree_ = 0;
  std::vector<Integer> minpoly_;
  RatMat basis_;
  RatMat basis_inv_;
  std::vector<RatMat> table_;
  Integer index_ = 1;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, RatVec coords);

  static FieldElem zero(const FieldPtr& K);
  static FieldElem one(const FieldPtr& K);
  static FieldElem from_rational(const FieldPtr& K, const Rational& q);
  // theta, the generator written `a` in text.
  static FieldElem generator(const FieldPtr& K);

  const FieldPtr& field() const { return field_; }
  const RatVec& coords() const { return coords_; }
  const Rational& operator[](Index i) const { return coords_(i); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_integral() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& y);
  FieldElem& operator-=(const FieldElem& y);
  FieldElem& operator*=(const FieldElem& y);

  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);
  friend bool operator==(const FieldElem& x, const FieldElem& y);

  // d x d matrix whose row i holds the coordinates of omega_i * x.
  RatMat mult_matrix() const;

 private:
  FieldPtr field_;
  RatVec coords_;
};

FieldElem elem_add(const FieldElem& x, const FieldElem& y);
FieldElem elem_mul(const FieldElem& x, const FieldElem& y);
FieldElem elem_inv(const FieldElem& x);
Rational elem_norm(const FieldElem& x);

void require_same_field(const FieldPtr& a, const FieldPtr& b);

// Fractional ideal num/den of R. num is the canonical HNF of a full-rank
// lattice in omega coordinates and gcd(content(num), den) = 1.
class FracIdeal {
 public:
  FracIdeal() = default;

  // Canonicalizes; does not check closure under multiplication by R.
  static FracIdeal from_lattice(const FieldPtr& K, const IntMat& rows, const Integer& den);
  // Same, but verifies that the lattice is an R-module.
  static FracIdeal from_lattice_checked(const FieldPtr& K, const IntMat& rows,
                                        const Integer& den);
  static FracIdeal unit(const FieldPtr& K);

  const FieldPtr& field() const { return field_; }
  const IntMat& num() const { return num_; }
  const Integer& den() const { return den_; }
  int degree() const { return static_cast<int>(num_.rows()); }
  bool is_integral() const { return den_ == 1; }
  bool is_unit() const;

  // The Z-basis element num.row(i) / den.
  FieldElem basis_element(Index i) const;
  std::vector<FieldElem> basis() const;

  friend bool operator==(const FracIdeal& a, const FracIdeal& b);

 private:
  FieldPtr field_;
  IntMat num_;
  Integer den_ = 1;
};

FracIdeal ideal_from_generators(const FieldPtr& K, std::span<const FieldElem> gens);
FracIdeal principal_ideal(const FieldElem& x);
FracIdeal ideal_add(const FracIdeal& a, const FracIdeal& b);
FracIdeal ideal_mul(const FracIdeal& a, const FracIdeal& b);
FracIdeal ideal_scale(const FracIdeal& a, const FieldElem& x);
FracIdeal ideal_pow(const FracIdeal& a, unsigned k);
FracIdeal ideal_inverse(const FracIdeal& a);
FracIdeal ideal_intersect(const FracIdeal& a, const FracIdeal& b);
// a contains b.
bool ideal_contains(const FracIdeal& a, const FracIdeal& b);
bool elem_in_ideal(const FieldElem& x, const FracIdeal& a);
Rational ideal_norm(const FracIdeal& a);

// Solves c = sum a_i * c_i with a_i in the ideal of part i. Throws
// DomainError("not in sum") if c is not in the sum of the modules a_i c_i.
std::vector<FieldElem> express_in_ideal_sum(
    const FieldElem& c, std::span<const std::pair<FracIdeal, FieldElem>> parts);

// beta with alpha - beta in m: symmetric residue of alpha against the HNF
// basis of m, pivot by pivot.
FieldElem reduce_elem_mod_ideal(const FieldElem& alpha, const FracIdeal& m);

struct SmallRep {
  FieldElem gamma;
  FracIdeal ideal;  // (1/gamma) * input
};
SmallRep ideal_small_rep(const FracIdeal& a);

struct PrimeIdeal {
  Integer p;
  FracIdeal ideal;
  int e = 1;
  int f = 1;
  // theta-polynomial g with ideal = <p, g(theta)>, ascending coefficients.
  std::vector<Integer> generator_poly;
};

std::vector<PrimeIdeal> prime_decompose(const Integer& p, const FieldPtr& K);

struct IdealFactor {
  PrimeIdeal prime;
  int exponent = 0;
};
std::vector<IdealFactor> factor_ideal(const FracIdeal& a, const Integer& bound);

}  // namespace pgb
