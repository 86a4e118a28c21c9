#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <string>

// Exact scalar types and the dense matrix aliases used throughout the library.
// Eigen only provides storage and elementwise arithmetic here; every algorithm
// that needs exactness (HNF, solving, inverses) is written against these
// aliases directly.

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 200
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pgb {

using Integer = mpz_class;
using Rational = mpq_class;
using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMat = Mat<Integer>;
using IntVec = RowVec<Integer>;
using RatMat = Mat<Rational>;
using RatVec = RowVec<Rational>;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// floor(a / b) for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Integer q with a - q*b in (-|b|/2, |b|/2].
inline Integer centered_quotient(const Rational& a, const Rational& b) {
  // q = ceil(a/b - 1/2), taken with |b| so the window is symmetric.
  Rational t = a / abs(b) - Rational(1, 2);
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  if (sgn(b) < 0) q = -q;
  return q;
}

// n/d in lowest terms (mpq_class(n, d) does not canonicalize).
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Common denominator of a rational row vector.
inline Integer common_denominator(const RatVec& v) {
  Integer d = 1;
  for (Index i = 0; i < v.size(); ++i) d = lcm(d, Integer(v(i).get_den()));
  return d;
}

template <typename Derived>
IntVec scale_to_integer(const Eigen::MatrixBase<Derived>& v, const Integer& den) {
  IntVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    Rational t = v(i) * den;
    out(i) = t.get_num();
  }
  return out;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

}  // namespace pgb
