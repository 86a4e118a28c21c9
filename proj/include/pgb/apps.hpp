#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pgb/numberfield.hpp"
#include "pgb/pseudo.hpp"

namespace pgb {

// A non-zero ideal of R contained in <F>, found from a representation of 1
// over K. nullopt when <F> generates a proper ideal of K[x], i.e. <F> ∩ R = 0.
std::optional<FracIdeal> find_conductor_ideal(const PseudoBasis& F);

// opts with the conductor filled in from find_conductor_ideal when unset.
BuchbergerOptions with_conductor(const PseudoBasis& F, BuchbergerOptions opts);

// Owns a generating set and lazily computes its pseudo-Groebner basis.
class IdealContext {
 public:
  explicit IdealContext(PseudoBasis F, BuchbergerOptions opts = {});

  const PseudoBasis& generators() const { return gens_; }
  const PseudoBasis& groebner();
  bool contains(const PseudoPoly& p);
  bool contains(const Poly& f) { return contains(pseudo(f)); }

 private:
  PseudoBasis gens_;
  BuchbergerOptions opts_;
  std::optional<PseudoBasis> gb_;
};

bool ideal_membership(const PseudoPoly& p, const PseudoBasis& F);

// Elements of G involving only the variables in `keep`. The complement of
// `keep` must be a leading block the ring order eliminates; throws
// DomainError("wrong order") otherwise.
PseudoBasis eliminate(const PseudoBasis& G, std::span<const int> keep);

// Pseudo-Groebner basis of <F1> ∩ <F2>, via <w F1, (1-w) F2> ∩ R[x].
PseudoBasis ideal_intersection(const PseudoBasis& F1, const PseudoBasis& F2,
                               const BuchbergerOptions& opts = {});

// <F> ∩ R as the sum of ideal * g over the constant elements of a
// pseudo-Groebner basis; nullopt for the zero ideal.
std::optional<FracIdeal> intersect_with_R(const PseudoBasis& F, const BuchbergerOptions& opts = {});

struct AffineScheme {
  PseudoBasis generators;
  int dim = 0;  // expected dimension of the fibers
};

// Generators of X together with the non-zero (n - dim)-minors of the Jacobian.
PseudoBasis singular_ideal(const AffineScheme& X);

struct BadPrimesReport {
  FracIdeal ideal;  // singular ideal ∩ R
  Rational norm;
  std::vector<IdealFactor> factors;
};

// Throws DomainError("zero intersection") when the singular ideal misses R,
// and DomainError("norm not bound-smooth") from the factorization. With
// auto_conductor the singular ideal's conductor drives coefficient reduction.
BadPrimesReport bad_primes(const AffineScheme& X, const Integer& bound, const BuchbergerOptions& opts = {},
                           bool auto_conductor = true);

}  // namespace pgb
