#include "pgb/pseudo.hpp"

#include <algorithm>

#include "pgb/errors.hpp"

namespace pgb {
namespace {

// One head reduction of (f, I) modulo G, or nullopt if LT is minimal.
// `inverse` caches I^-1 across calls with the same ideal.
std::optional<Poly> head_reduce(const Poly& f, const FracIdeal& I, std::optional<FracIdeal>& inverse,
                                const PseudoBasis& G) {
  const ExpVec& m = f.lm();
  const FieldElem& c = f.lc();
  std::vector<std::size_t> J;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (monomial_divides(G[i].f.lm(), m)) J.push_back(i);
  }
  if (J.empty()) return std::nullopt;
  const FracIdeal L = ideal_scale(I, c);
  for (std::size_t i : J) {
    if (ideal_contains(G.lc_ideal(i), L)) {
      const Poly& g = G[i].f;
      return f.sub_mul_term(monomial_quotient(m, g.lm()), c / g.lc(), g);
    }
  }
  if (J.size() == 1) return std::nullopt;
  FracIdeal S = G.lc_ideal(J[0]);
  for (std::size_t k = 1; k < J.size(); ++k) S = ideal_add(S, G.lc_ideal(J[k]));
  if (!ideal_contains(S, L)) return std::nullopt;
  if (!inverse) inverse = ideal_inverse(I);
  std::vector<std::pair<FracIdeal, FieldElem>> parts;
  for (std::size_t i : J) parts.emplace_back(ideal_mul(G[i].ideal, *inverse), G[i].f.lc());
  const auto a = express_in_ideal_sum(c, parts);
  Poly out = f;
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (a[k].is_zero()) continue;
    const Poly& g = G[J[k]].f;
    out = out.sub_mul_term(monomial_quotient(m, g.lm()), a[k], g);
  }
  return out;
}

FracIdeal unit_for(const Poly& f) { return FracIdeal::unit(f.field()); }

}  // namespace

PseudoPoly pseudo(Poly f) {
  FracIdeal I = unit_for(f);
  return {std::move(f), std::move(I)};
}

PseudoPoly pseudo(Poly f, FracIdeal ideal) {
  require_same_field(f.field(), ideal.field());
  return {std::move(f), std::move(ideal)};
}

bool satisfies_invariant(const PseudoPoly& p) {
  for (const auto& t : p.f.terms()) {
    if (!ideal_scale(p.ideal, t.coeff).is_integral()) return false;
  }
  return true;
}

FracIdeal lc_ideal(const PseudoPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  return ideal_scale(p.ideal, p.f.lc());
}

void PseudoBasis::push_back(PseudoPoly p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  if (!ring_) ring_ = p.f.ring();
  require_same_ring(ring_, p.f.ring());
  lc_ideals_.push_back(pgb::lc_ideal(p));
  elems_.push_back(std::move(p));
}

Reducibility can_reduce(const PseudoPoly& p, const PseudoBasis& G) {
  Reducibility out;
  if (p.is_zero()) return out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (monomial_divides(G[i].f.lm(), p.f.lm())) out.divisors.push_back(i);
  }
  if (out.divisors.empty()) return out;
  FracIdeal S = G.lc_ideal(out.divisors[0]);
  for (std::size_t k = 1; k < out.divisors.size(); ++k) S = ideal_add(S, G.lc_ideal(out.divisors[k]));
  out.reducible = ideal_contains(S, lc_ideal(p));
  return out;
}

PseudoPoly reduce_step(const PseudoPoly& p, const PseudoBasis& G) {
  if (p.is_zero()) throw DomainError("not reducible", "zero polynomial");
  std::optional<FracIdeal> inverse;
  auto r = head_reduce(p.f, p.ideal, inverse, G);
  if (!r) throw DomainError("not reducible");
  return {std::move(*r), p.ideal};
}

PseudoPoly reduce_full(const PseudoPoly& p, const PseudoBasis& G) {
  std::optional<FracIdeal> inverse;
  Poly cur = p.f;
  std::vector<Term> rest;
  while (!cur.is_zero()) {
    if (auto r = head_reduce(cur, p.ideal, inverse, G)) {
      cur = std::move(*r);
    } else {
      rest.push_back(cur.lt());
      cur = cur.without_lt();
    }
  }
  return {Poly::from_terms(p.f.ring(), std::move(rest)), p.ideal};
}

PseudoPoly spoly(const PseudoPoly& p, const PseudoPoly& q) {
  const Poly& f = p.f;
  const Poly& g = q.f;
  const ExpVec l = monomial_lcm(f.lm(), g.lm());
  Poly s = f.mul_term(monomial_quotient(l, f.lm()), elem_inv(f.lc()));
  s = s.sub_mul_term(monomial_quotient(l, g.lm()), elem_inv(g.lc()), g);
  return {std::move(s), ideal_intersect(lc_ideal(p), lc_ideal(q))};
}

bool product_criterion_applies(const PseudoPoly& p, const PseudoPoly& q) {
  if (!monomials_coprime(p.f.lm(), q.f.lm())) return false;
  return ideal_add(lc_ideal(p), lc_ideal(q)).is_unit();
}

PseudoPoly canonicalize(const PseudoPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  const FieldElem& c = p.f.lc();
  if (c.is_one()) return p;
  return {p.f.scale(elem_inv(c)), ideal_scale(p.ideal, c)};
}

PseudoPoly coeff_reduce(const PseudoPoly& p, const FracIdeal& N) {
  PseudoPoly q = canonicalize(p);
  const FracIdeal M = ideal_mul(N, ideal_inverse(q.ideal));
  std::vector<Term> terms;
  for (const auto& t : q.f.terms()) {
    FieldElem c = reduce_elem_mod_ideal(t.coeff, M);
    if (!c.is_zero()) terms.push_back({t.exp, std::move(c)});
  }
  return {Poly::from_terms(q.f.ring(), std::move(terms)), std::move(q.ideal)};
}

bool is_groebner(const PseudoBasis& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      PseudoPoly s = spoly(G[i], G[j]);
      std::optional<FracIdeal> inverse;
      Poly cur = s.f;
      while (!cur.is_zero()) {
        auto r = head_reduce(cur, s.ideal, inverse, G);
        if (!r) return false;
        cur = std::move(*r);
      }
    }
  }
  return true;
}

bool lt_ideal_member(const PseudoPoly& p, const PseudoBasis& G) { return can_reduce(p, G).reducible; }

std::vector<Poly> expand_to_classical(const PseudoBasis& G) {
  std::vector<Poly> out;
  for (const auto& p : G) {
    SmallRep s = ideal_small_rep(p.ideal);
    if (s.ideal.is_unit()) {
      out.push_back(p.f.scale(s.gamma));
      continue;
    }
    for (const auto& mu : p.ideal.basis()) out.push_back(p.f.scale(mu));
  }
  return out;
}

bool pseudo_divides(const PseudoPoly& g, const PseudoPoly& f) {
  if (g.is_zero() || f.is_zero()) return false;
  if (!monomial_divides(g.f.lm(), f.f.lm())) return false;
  return ideal_contains(lc_ideal(g), lc_ideal(f));
}

bool is_pseudo_syzygy(std::span<const Poly> h, const FracIdeal& h_ideal, const PseudoBasis& G) {
  if (h.size() != G.size()) throw DomainError("length mismatch");
  Poly sum(G.ring());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (const auto& t : h[i].terms()) {
      if (!ideal_contains(G[i].ideal, ideal_scale(h_ideal, t.coeff))) return false;
    }
    sum += h[i] * G[i].f;
  }
  return sum.is_zero();
}

}  // namespace pgb
