#include <set>
#include <tuple>

#include "pgb/errors.hpp"
#include "pgb/io.hpp"
#include "pgb/pseudo.hpp"

namespace pgb {
namespace {

constexpr int kMaxConductorRounds = 16;

std::string describe(const PseudoPoly& p) {
  std::string lm = format_poly(Poly::monomial(p.f.ring(), p.f.lm(), FieldElem::one(p.f.field())));
  return "LM " + lm + ", " + std::to_string(p.f.size()) + " terms";
}

// Removes, in order, every element whose leading data is covered by the
// remaining ones. Lt(G) is unchanged at each step.
PseudoBasis autoreduce(const PseudoBasis& G) {
  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    PseudoBasis others(G.ring());
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (j != i && keep[j]) others.push_back(G[j]);
    }
    if (!others.empty() && lt_ideal_member(G[i], others)) keep[i] = false;
  }
  PseudoBasis out(G.ring());
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (keep[i]) out.push_back(G[i]);
  }
  return out;
}

}  // namespace

PseudoBasis buchberger(const PseudoBasis& F, const BuchbergerOptions& opts, BuchbergerStats* stats) {
  if (F.empty()) throw DomainError("empty input");
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::ostream* trace = opts.trace;

  PseudoBasis G(F.ring());
  // (lcm total degree, i, j): the normal strategy.
  std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
  auto insert = [&](PseudoPoly p) {
    if (opts.canonicalize) p = canonicalize(p);
    const std::size_t j = G.size();
    for (std::size_t i = 0; i < j; ++i)
      pairs.emplace(total_degree(monomial_lcm(G[i].f.lm(), p.f.lm())), i, j);
    if (trace) *trace << "insert #" << j << ": " << describe(p) << "\n";
    G.push_back(std::move(p));
  };

  for (const auto& p : F) insert(p);
  if (opts.conductor) {
    insert(pseudo(Poly::constant(F.ring(), FieldElem::one(F.ring()->field())), *opts.conductor));
  }

  while (!pairs.empty()) {
    const auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    ++st.pairs_total;
    if (opts.use_product_criterion && product_criterion_applies(G[i], G[j])) {
      ++st.pairs_skipped;
      if (st.record_skipped) st.skipped.emplace_back(G[i], G[j]);
      if (trace) *trace << "pair (" << i << "," << j << ") deg " << deg << ": product criterion\n";
      continue;
    }
    PseudoPoly h = spoly(G[i], G[j]);
    if (!h.is_zero()) h = reduce_full(h, G);
    if (opts.conductor) {
      for (int round = 0; round < kMaxConductorRounds && !h.is_zero(); ++round) {
        PseudoPoly c = coeff_reduce(h, *opts.conductor);
        if (c.is_zero()) {
          h = c;
          break;
        }
        PseudoPoly r = reduce_full(c, G);
        const bool stable = !r.is_zero() && r.f == c.f;
        h = std::move(r);
        if (stable) break;
      }
    }
    if (h.is_zero()) {
      ++st.zero_reductions;
      if (trace) *trace << "pair (" << i << "," << j << ") deg " << deg << ": reduced to zero\n";
      continue;
    }
    if (trace) *trace << "pair (" << i << "," << j << ") deg " << deg << ": new element\n";
    ++st.inserted;
    insert(std::move(h));
  }
  if (opts.autoreduce) return autoreduce(G);
  return G;
}

}  // namespace pgb
