#include <algorithm>
#include <map>

#include "pgb/errors.hpp"
#include "pgb/pseudo.hpp"

namespace pgb {

PseudoBasis strong_basis(const PseudoBasis& G, std::size_t max_subsets) {
  PseudoBasis out(G.ring());
  if (G.empty()) return out;

  // Every saturated index set J is determined by x_J, and the x_J are exactly
  // the lcms of non-empty subsets of leading monomials.
  std::map<ExpVec, bool> closure;
  std::vector<ExpVec> frontier;
  for (const auto& g : G) {
    if (closure.emplace(g.f.lm(), true).second) frontier.push_back(g.f.lm());
  }
  while (!frontier.empty()) {
    std::vector<ExpVec> next;
    for (const auto& m : frontier) {
      for (const auto& g : G) {
        ExpVec l = monomial_lcm(m, g.f.lm());
        if (closure.emplace(l, true).second) {
          if (closure.size() > max_subsets) throw DomainError("too many subsets");
          next.push_back(std::move(l));
        }
      }
    }
    frontier = std::move(next);
  }

  const MonomialOrder& ord = G.ring()->order();
  std::vector<ExpVec> monomials;
  for (const auto& [m, unused] : closure) monomials.push_back(m);
  std::sort(monomials.begin(), monomials.end(),
            [&](const ExpVec& a, const ExpVec& b) { return ord.compare(a, b) < 0; });

  const FieldElem one = FieldElem::one(G.ring()->field());
  for (const auto& xJ : monomials) {
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (monomial_divides(G[i].f.lm(), xJ)) J.push_back(i);
    }
    FracIdeal cJ = G.lc_ideal(J[0]);
    for (std::size_t k = 1; k < J.size(); ++k) cJ = ideal_add(cJ, G.lc_ideal(J[k]));
    const FracIdeal cJ_inv = ideal_inverse(cJ);
    std::vector<std::pair<FracIdeal, FieldElem>> parts;
    for (std::size_t i : J) parts.emplace_back(ideal_mul(cJ_inv, G[i].ideal), G[i].f.lc());
    const auto a = express_in_ideal_sum(one, parts);
    Poly fJ(G.ring());
    for (std::size_t k = 0; k < J.size(); ++k) {
      if (a[k].is_zero()) continue;
      const Poly& g = G[J[k]].f;
      fJ = fJ.sub_mul_term(monomial_quotient(xJ, g.lm()), -a[k], g);
    }
    out.push_back({std::move(fJ), std::move(cJ)});
  }
  return out;
}

}  // namespace pgb
