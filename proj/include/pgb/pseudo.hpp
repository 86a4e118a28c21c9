#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "pgb/mpoly.hpp"
#include "pgb/numberfield.hpp"

// Pseudo-polynomials (f, I) over R = O_K: a polynomial f in K[x] together with
// a fractional ideal I such that I * f has coefficients in R. They stand for
// the R-module I*f inside R[x].

namespace pgb {

struct PseudoPoly {
  Poly f;
  FracIdeal ideal;

  bool is_zero() const { return f.is_zero(); }
};

// Wraps f with the unit ideal.
PseudoPoly pseudo(Poly f);
PseudoPoly pseudo(Poly f, FracIdeal ideal);

// ideal * c is integral for every coefficient c.
bool satisfies_invariant(const PseudoPoly& p);

// ideal * LC(f); always integral.
FracIdeal lc_ideal(const PseudoPoly& p);

// Ordered list of non-zero pseudo-polynomials with cached leading ideals.
class PseudoBasis {
 public:
  PseudoBasis() = default;
  explicit PseudoBasis(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const PseudoPoly& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<PseudoPoly>& elems() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  const FracIdeal& lc_ideal(std::size_t i) const { return lc_ideals_[i]; }

  // Throws DomainError("zero polynomial") for zero input.
  void push_back(PseudoPoly p);

 private:
  RingPtr ring_;
  std::vector<PseudoPoly> elems_;
  std::vector<FracIdeal> lc_ideals_;
};

struct Reducibility {
  bool reducible = false;
  std::vector<std::size_t> divisors;  // i with LM(g_i) | LM(f)
};

Reducibility can_reduce(const PseudoPoly& p, const PseudoBasis& G);
// Throws DomainError("not reducible").
PseudoPoly reduce_step(const PseudoPoly& p, const PseudoBasis& G);
// Full normal form: head reduction to minimality, then the tail.
PseudoPoly reduce_full(const PseudoPoly& p, const PseudoBasis& G);

PseudoPoly spoly(const PseudoPoly& p, const PseudoPoly& q);
bool product_criterion_applies(const PseudoPoly& p, const PseudoPoly& q);

// (f / LC(f), ideal * LC(f)).
PseudoPoly canonicalize(const PseudoPoly& p);
// Canonicalizes, then reduces every coefficient modulo N * ideal^-1.
PseudoPoly coeff_reduce(const PseudoPoly& p, const FracIdeal& N);

struct BuchbergerOptions {
  bool use_product_criterion = true;
  // A non-zero ideal of R contained in <F>; enables coefficient reduction.
  std::optional<FracIdeal> conductor;
  bool canonicalize = true;
  // Drop elements whose leading term data is covered by the others.
  bool autoreduce = true;
  std::ostream* trace = nullptr;
};

struct BuchbergerStats {
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t inserted = 0;
  // Filled only when record_skipped is set.
  bool record_skipped = false;
  std::vector<std::pair<PseudoPoly, PseudoPoly>> skipped;
};

PseudoBasis buchberger(const PseudoBasis& F, const BuchbergerOptions& opts = {},
                       BuchbergerStats* stats = nullptr);
bool is_groebner(const PseudoBasis& G);
// Lt(p) is contained in Lt(G).
bool lt_ideal_member(const PseudoPoly& p, const PseudoBasis& G);

// Generators c * g_i over R for a small generating set c of each ideal.
std::vector<Poly> expand_to_classical(const PseudoBasis& G);

// g divides f: ideal_f * LC(f) lies in ideal_g * LC(g) and LM(g) | LM(f).
bool pseudo_divides(const PseudoPoly& g, const PseudoPoly& f);

// Throws DomainError("too many subsets") when the lcm closure of the leading
// monomials exceeds max_subsets.
PseudoBasis strong_basis(const PseudoBasis& G, std::size_t max_subsets = std::size_t{1} << 16);

bool is_pseudo_syzygy(std::span<const Poly> h, const FracIdeal& h_ideal, const PseudoBasis& G);

}  // namespace pgb
