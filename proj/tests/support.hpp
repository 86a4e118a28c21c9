#pragma once

#include <random>
#include <vector>

#include "pgb/numberfield.hpp"

// Random generators and fixed fields shared by the unit and acceptance suites.

namespace pgb::testing {

inline FieldPtr field_z() { return NumberField::rationals(); }

inline FieldPtr field_sqrt10() {
  static const FieldPtr K = NumberField::create({-10, 0, 1});
  return K;
}

inline FieldPtr field_sqrt_minus5() {
  static const FieldPtr K = NumberField::create({5, 0, 1});
  return K;
}

inline FieldPtr field_cbrt2() {
  static const FieldPtr K = NumberField::create({-2, 0, 0, 1});
  return K;
}

// Q(sqrt 5) with R = Z[(1+sqrt 5)/2], a non-monogenic-by-theta basis.
inline FieldPtr field_golden() {
  static const FieldPtr K = [] {
    RatMat B(2, 2);
    B << Rational(1), Rational(0), Rational(1, 2), Rational(1, 2);
    return NumberField::create({-5, 0, 1}, B);
  }();
  return K;
}

inline FieldElem elem(const FieldPtr& K, std::initializer_list<long> coords) {
  RatVec c = RatVec::Zero(K->degree());
  Index i = 0;
  for (long x : coords) c(i++) = x;
  return {K, c};
}

inline FieldElem random_integral(std::mt19937_64& rng, const FieldPtr& K, long h) {
  std::uniform_int_distribution<long> dist(-h, h);
  RatVec c(K->degree());
  for (Index i = 0; i < c.size(); ++i) c(i) = dist(rng);
  return {K, c};
}

inline FieldElem random_nonzero_integral(std::mt19937_64& rng, const FieldPtr& K, long h) {
  for (;;) {
    FieldElem x = random_integral(rng, K, h);
    if (!x.is_zero()) return x;
  }
}

inline FracIdeal random_integral_ideal(std::mt19937_64& rng, const FieldPtr& K, long h) {
  std::vector<FieldElem> gens{random_nonzero_integral(rng, K, h)};
  if (rng() % 3 != 0) gens.push_back(random_integral(rng, K, h));
  return ideal_from_generators(K, gens);
}

inline FracIdeal random_frac_ideal(std::mt19937_64& rng, const FieldPtr& K, long h) {
  FracIdeal a = random_integral_ideal(rng, K, h);
  const long den = 1 + static_cast<long>(rng() % 4);
  return ideal_scale(a, FieldElem::from_rational(K, ratio(1, den)));
}

}  // namespace pgb::testing
