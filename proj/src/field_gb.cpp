#include <algorithm>
#include <set>
#include <tuple>

#include "pgb/errors.hpp"
#include "pgb/mpoly.hpp"

namespace pgb {
namespace {

struct Tracked {
  Poly p;
  std::vector<Poly> cof;
};

void sub_mul_tracked(Tracked& h, const ExpVec& exp, const FieldElem& c, const Tracked& g) {
  h.p = h.p.sub_mul_term(exp, c, g.p);
  for (std::size_t k = 0; k < h.cof.size(); ++k) h.cof[k] = h.cof[k].sub_mul_term(exp, c, g.cof[k]);
}

// Full normal form of h modulo `basis` (only entries flagged alive).
Tracked reduce(Tracked h, const std::vector<Tracked>& basis, const std::vector<bool>& alive,
               std::size_t skip = static_cast<std::size_t>(-1)) {
  Tracked r{Poly(h.p.ring()), h.cof};
  Poly rem(h.p.ring());
  while (!h.p.is_zero()) {
    const Term& lt = h.p.lt();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!alive[i] || i == skip) continue;
      const Poly& g = basis[i].p;
      if (!monomial_divides(g.lm(), lt.exp)) continue;
      const FieldElem c = lt.coeff / g.lc();
      const ExpVec e = monomial_quotient(lt.exp, g.lm());
      sub_mul_tracked(h, e, c, basis[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem += Poly::monomial(h.p.ring(), lt.exp, lt.coeff);
      h.p = h.p.without_lt();
    }
  }
  r.p = std::move(rem);
  r.cof = std::move(h.cof);
  return r;
}

}  // namespace

FieldGB field_buchberger(std::span<const Poly> F, bool track) {
  if (F.empty()) throw DomainError("empty input");
  const RingPtr& R = F[0].ring();
  const std::size_t m = F.size();
  std::vector<Tracked> basis;
  std::vector<bool> alive;
  auto cof_unit = [&](std::size_t j) {
    std::vector<Poly> c;
    if (!track) return c;
    for (std::size_t k = 0; k < m; ++k)
      c.push_back(k == j ? Poly::constant(R, FieldElem::one(R->field())) : Poly(R));
    return c;
  };

  // (lcm degree, i, j), processed smallest first.
  std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
  auto insert = [&](Tracked t) {
    const std::size_t j = basis.size();
    const FieldElem inv = elem_inv(t.p.lc());
    t.p = t.p.scale(inv);
    for (auto& c : t.cof) c = c.scale(inv);
    for (std::size_t i = 0; i < j; ++i) {
      if (!alive[i]) continue;
      pairs.emplace(total_degree(monomial_lcm(basis[i].p.lm(), t.p.lm())), i, j);
    }
    basis.push_back(std::move(t));
    alive.push_back(true);
  };

  for (std::size_t j = 0; j < m; ++j) {
    require_same_ring(R, F[j].ring());
    if (F[j].is_zero()) continue;
    Tracked t = reduce({F[j], cof_unit(j)}, basis, alive);
    if (!t.p.is_zero()) insert(std::move(t));
  }

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (!alive[i] || !alive[j]) continue;
    const Poly& f = basis[i].p;
    const Poly& g = basis[j].p;
    if (monomials_coprime(f.lm(), g.lm())) continue;
    const ExpVec l = monomial_lcm(f.lm(), g.lm());
    Tracked s{Poly(R), track ? std::vector<Poly>(m, Poly(R)) : std::vector<Poly>{}};
    sub_mul_tracked(s, monomial_quotient(l, f.lm()), -FieldElem::one(R->field()), basis[i]);
    sub_mul_tracked(s, monomial_quotient(l, g.lm()), FieldElem::one(R->field()), basis[j]);
    Tracked h = reduce(std::move(s), basis, alive);
    if (h.p.is_zero()) continue;
    insert(std::move(h));
    if (basis.back().p.is_constant()) break;
  }

  // Minimalize, then inter-reduce.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !alive[j]) continue;
      if (monomial_divides(basis[j].p.lm(), basis[i].p.lm())) {
        alive[i] = false;
        break;
      }
    }
  }
  std::vector<Tracked> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!alive[i]) continue;
    Tracked head{Poly::monomial(R, basis[i].p.lm(), basis[i].p.lc()), {}};
    Tracked tail{basis[i].p.without_lt(), basis[i].cof};
    Tracked r = reduce(std::move(tail), basis, alive, i);
    r.p += head.p;
    reduced.push_back(std::move(r));
  }
  const MonomialOrder& ord = R->order();
  std::sort(reduced.begin(), reduced.end(),
            [&](const Tracked& a, const Tracked& b) { return ord.compare(a.p.lm(), b.p.lm()) > 0; });

  FieldGB out;
  for (auto& t : reduced) {
    out.basis.push_back(std::move(t.p));
    if (track) out.transform.push_back(std::move(t.cof));
  }
  return out;
}

Poly field_normal_form(const Poly& f, std::span<const Poly> G) {
  std::vector<Tracked> basis;
  for (const auto& g : G) {
    if (!g.is_zero()) basis.push_back({g, {}});
  }
  return reduce({f, {}}, basis, std::vector<bool>(basis.size(), true)).p;
}

Poly field_normal_form(const Poly& f, const FieldGB& G) { return field_normal_form(f, G.basis); }

std::vector<Poly> lift_one(std::span<const Poly> F) {
  FieldGB G = field_buchberger(F, true);
  if (G.basis.size() != 1 || !G.basis[0].is_constant() || G.basis[0].is_zero())
    throw DomainError("not unit ideal");
  return G.transform[0];
}

}  // namespace pgb
