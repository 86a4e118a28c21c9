#include "pgb/apps.hpp"

#include <algorithm>

#include "pgb/errors.hpp"

namespace pgb {

std::optional<FracIdeal> find_conductor_ideal(const PseudoBasis& F) {
  if (F.empty()) return std::nullopt;
  std::vector<Poly> polys;
  for (const auto& p : F) polys.push_back(p.f);
  std::vector<Poly> a;
  try {
    a = lift_one(polys);
  } catch (const DomainError& e) {
    if (e.kind() == "not unit ideal") return std::nullopt;
    throw;
  }
  // d with d * a_i in ideal_i[x] for all i: d in ideal_i * C_i^-1 where C_i
  // is the coefficient ideal of a_i. Then d = sum (d a_i) f_i lies in <F>.
  const FieldPtr& K = F.ring()->field();
  FracIdeal N = FracIdeal::unit(K);
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (a[i].is_zero()) continue;
    std::vector<FieldElem> coeffs;
    for (const auto& t : a[i].terms()) coeffs.push_back(t.coeff);
    const FracIdeal C = ideal_from_generators(K, coeffs);
    N = ideal_intersect(N, ideal_mul(F[i].ideal, ideal_inverse(C)));
  }
  return N;
}

BuchbergerOptions with_conductor(const PseudoBasis& F, BuchbergerOptions opts) {
  if (!opts.conductor) opts.conductor = find_conductor_ideal(F);
  return opts;
}

IdealContext::IdealContext(PseudoBasis F, BuchbergerOptions opts) : gens_(std::move(F)), opts_(opts) {}

const PseudoBasis& IdealContext::groebner() {
  if (!gb_) gb_ = buchberger(gens_, opts_);
  return *gb_;
}

bool IdealContext::contains(const PseudoPoly& p) {
  if (p.is_zero()) return true;
  return reduce_full(p, groebner()).is_zero();
}

bool ideal_membership(const PseudoPoly& p, const PseudoBasis& F) {
  IdealContext ctx(F);
  return ctx.contains(p);
}

PseudoBasis eliminate(const PseudoBasis& G, std::span<const int> keep) {
  const RingPtr& R = G.ring();
  const int n = R->nvars();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int v : keep) {
    if (v < 0 || v >= n) throw DomainError("dimension mismatch", "no such variable");
    kept[static_cast<std::size_t>(v)] = true;
  }
  const int k = static_cast<int>(std::count(kept.begin(), kept.end(), false));
  for (int i = 0; i < n; ++i) {
    if (kept[static_cast<std::size_t>(i)] != (i >= k)) throw DomainError("wrong order", "eliminated variables must come first");
  }
  if (!R->order().eliminates_first(k, n)) throw DomainError("wrong order");
  PseudoBasis out(R);
  for (const auto& g : G) {
    if (g.f.only_in(keep)) out.push_back(g);
  }
  return out;
}

PseudoBasis ideal_intersection(const PseudoBasis& F1, const PseudoBasis& F2, const BuchbergerOptions& opts) {
  if (F1.empty() || F2.empty()) throw DomainError("empty input");
  const RingPtr& R = F1.ring();
  require_same_ring(R, F2.ring());
  const int n = R->nvars();
  std::vector<std::string> vars{"w"};
  for (const auto& v : R->vars()) vars.push_back(v == "w" ? "w_" : v);
  const RingPtr S = PolyRing::create(R->field(), vars, MonomialOrder::block(1));

  std::vector<int> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i + 1;
  const FieldElem one = FieldElem::one(R->field());
  const Poly w = Poly::variable(S, 0);
  const Poly one_minus_w = Poly::constant(S, one) - w;

  PseudoBasis H(S);
  for (const auto& p : F1) H.push_back({w * change_ring(p.f, S, up), p.ideal});
  for (const auto& p : F2) H.push_back({one_minus_w * change_ring(p.f, S, up), p.ideal});

  BuchbergerOptions inner = opts;
  inner.conductor.reset();
  std::vector<int> keep(up);
  const PseudoBasis E = eliminate(buchberger(H, inner), keep);

  std::vector<int> down{-1};
  for (int i = 0; i < n; ++i) down.push_back(i);
  PseudoBasis back(R);
  for (const auto& p : E) back.push_back({change_ring(p.f, R, down), p.ideal});
  if (back.empty()) return back;
  // The eliminated basis is a basis for the block order; redo it for R's own order.
  return buchberger(back, inner);
}

std::optional<FracIdeal> intersect_with_R(const PseudoBasis& F, const BuchbergerOptions& opts) {
  const PseudoBasis G = buchberger(F, opts);
  std::optional<FracIdeal> sum;
  for (const auto& g : G) {
    if (!g.f.is_constant()) continue;
    FracIdeal part = ideal_scale(g.ideal, g.f.lc());
    sum = sum ? ideal_add(*sum, part) : part;
  }
  return sum;
}

PseudoBasis singular_ideal(const AffineScheme& X) {
  const PseudoBasis& F = X.generators;
  if (F.empty()) throw DomainError("empty input");
  const int n = F.ring()->nvars();
  if (X.dim < 0 || X.dim >= n) throw DomainError("dimension mismatch", "dim must satisfy 0 <= dim < n");
  PseudoBasis out = F;
  std::vector<Poly> polys;
  for (const auto& p : F) polys.push_back(p.f);
  const int r = n - X.dim;
  if (r > static_cast<int>(polys.size())) return out;
  for (auto& m : jacobian_minors(polys, r)) {
    if (!m.is_zero()) out.push_back(pseudo(std::move(m)));
  }
  return out;
}

BadPrimesReport bad_primes(const AffineScheme& X, const Integer& bound, const BuchbergerOptions& opts,
                           bool auto_conductor) {
  const PseudoBasis S = singular_ideal(X);
  const auto N = intersect_with_R(S, auto_conductor ? with_conductor(S, opts) : opts);
  if (!N) throw DomainError("zero intersection", "generic fiber singular or flatness violated");
  BadPrimesReport rep{*N, ideal_norm(*N), factor_ideal(*N, bound)};
  return rep;
}

}  // namespace pgb
