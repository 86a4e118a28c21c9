#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "pgb/errors.hpp"
#include "pgb/io.hpp"
#include "pgb/pseudo.hpp"
#include "support.hpp"

using namespace pgb;
using namespace pgb::testing;

namespace {

RingPtr ring(const FieldPtr& K, std::vector<std::string> vars, MonomialOrder ord = MonomialOrder::lex()) {
  return PolyRing::create(K, std::move(vars), ord);
}

FracIdeal zideal(const FieldPtr& K, long n) { return principal_ideal(FieldElem::from_rational(K, n)); }

FracIdeal zfrac(const FieldPtr& K, long n, long d) {
  return principal_ideal(FieldElem::from_rational(K, ratio(n, d)));
}

PseudoPoly pp(const RingPtr& R, const char* f) { return pseudo(parse_poly(R, f)); }
PseudoPoly pp(const RingPtr& R, const char* f, FracIdeal I) { return pseudo(parse_poly(R, f), std::move(I)); }

PseudoBasis basis(const RingPtr& R, std::vector<PseudoPoly> ps) {
  PseudoBasis G(R);
  for (auto& p : ps) G.push_back(std::move(p));
  return G;
}

bool same_module(const PseudoPoly& p, const PseudoPoly& q) {
  if (p.f.size() != q.f.size()) return false;
  for (std::size_t i = 0; i < p.f.size(); ++i) {
    const Term& s = p.f.terms()[i];
    const Term& t = q.f.terms()[i];
    if (s.exp != t.exp) return false;
    if (!(ideal_scale(p.ideal, s.coeff) == ideal_scale(q.ideal, t.coeff))) return false;
  }
  return true;
}

// Lt(A) == Lt(B) via mutual membership of all leading data.
bool same_lt(const PseudoBasis& A, const PseudoBasis& B) {
  for (const auto& p : A) {
    if (!lt_ideal_member(p, B)) return false;
  }
  for (const auto& p : B) {
    if (!lt_ideal_member(p, A)) return false;
  }
  return true;
}

ExpVec random_exp(std::mt19937_64& rng, int n, int maxdeg) {
  ExpVec e(static_cast<std::size_t>(n));
  for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
  return e;
}

Poly random_poly(std::mt19937_64& rng, const RingPtr& R, int terms, int maxdeg, long h) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back({random_exp(rng, R->nvars(), maxdeg), random_integral(rng, R->field(), h)});
  return Poly::from_terms(R, std::move(ts));
}

Poly random_nonzero_poly(std::mt19937_64& rng, const RingPtr& R, int terms, int maxdeg, long h) {
  for (;;) {
    Poly f = random_poly(rng, R, terms, maxdeg, h);
    if (!f.is_zero()) return f;
  }
}

// (f / d, d * a) with f integral and a an integral ideal.
PseudoPoly random_pseudo(std::mt19937_64& rng, const RingPtr& R, int terms, int maxdeg) {
  const FieldPtr& K = R->field();
  Poly f = random_nonzero_poly(rng, R, terms, maxdeg, 4);
  const long d = 1 + static_cast<long>(rng() % 3);
  FracIdeal a = random_integral_ideal(rng, K, 3);
  const FieldElem dd = FieldElem::from_rational(K, d);
  return {f.scale(elem_inv(dd)), ideal_scale(a, dd)};
}

}  // namespace

TEST_CASE("lc_ideal examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x"});
  CHECK(lc_ideal(pp(R, "2*x")) == zideal(Z, 2));
  CHECK(lc_ideal(pp(R, "x/2", zideal(Z, 2))).is_unit());
  auto K = field_sqrt10();
  auto S = ring(K, {"x"});
  CHECK(lc_ideal(pp(S, "(1728*a+3348)*x")) == principal_ideal(parse_elem(K, "1728*a+3348")));
  CHECK_THROWS_AS(lc_ideal(pseudo(Poly::zero(R))), DomainError);
}

TEST_CASE("can_reduce and lt_ideal_member examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto r = can_reduce(pp(R, "x"), basis(R, {pp(R, "x")}));
  CHECK(r.reducible);
  CHECK(r.divisors == std::vector<std::size_t>{0});
  r = can_reduce(pp(R, "x"), basis(R, {pp(R, "y")}));
  CHECK_FALSE(r.reducible);
  CHECK(r.divisors.empty());
  auto G = basis(R, {pp(R, "2*x"), pp(R, "3*x")});
  CHECK(can_reduce(pp(R, "x"), G).reducible);
  CHECK(lt_ideal_member(pp(R, "x"), G));
  CHECK_FALSE(lt_ideal_member(pp(R, "y"), basis(R, {pp(R, "x")})));
  CHECK_FALSE(can_reduce(pp(R, "x"), basis(R, {pp(R, "2*x")})).reducible);
  CHECK(can_reduce(pp(R, "x", zideal(Z, 2)), basis(R, {pp(R, "2*x")})).reducible);
}

TEST_CASE("reduce_step examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  CHECK(reduce_step(pp(R, "2*x"), basis(R, {pp(R, "x")})).is_zero());
  // 1 = (-1)*2 + 1*3
  auto G = basis(R, {pp(R, "2*x"), pp(R, "3*x")});
  auto h = reduce_step(pp(R, "x"), G);
  CHECK(h.is_zero());
  CHECK(h.ideal.is_unit());
  h = reduce_step(pp(R, "2*x+y"), basis(R, {pp(R, "2*x")}));
  CHECK(h.f == parse_poly(R, "y"));
  CHECK_THROWS_AS(reduce_step(pp(R, "y"), G), DomainError);
}

TEST_CASE("reduce_full examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto G = basis(R, {pp(R, "2*x+y"), pp(R, "3*x")});
  CHECK(reduce_full(G[0], G).is_zero());
  auto G2 = basis(R, {pp(R, "2*x"), pp(R, "3*x")});
  CHECK(reduce_full(pp(R, "6*x^2+y"), G2).f == parse_poly(R, "y"));
  auto G3 = basis(R, {pp(R, "2*x")});
  CHECK(reduce_full(pp(R, "y"), G3).f == parse_poly(R, "y"));
  // tail reduction
  CHECK(reduce_full(pp(R, "y^2+4*x"), G3).f == parse_poly(R, "y^2"));
}

TEST_CASE("spoly examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto s = spoly(pp(R, "x", zideal(Z, 2)), pp(R, "x", zideal(Z, 3)));
  CHECK(s.is_zero());
  CHECK(s.ideal == zideal(Z, 6));

  auto K = field_sqrt_minus5();
  auto S = ring(K, {"x"});
  auto p = pp(S, "2*x");
  auto q = pp(S, "(1+a)*x");
  s = spoly(p, q);
  CHECK(s.is_zero());
  // independent oracle: intersect the principal ideals directly
  auto c = ideal_intersect(principal_ideal(parse_elem(K, "2")), principal_ideal(parse_elem(K, "1+a")));
  CHECK(s.ideal == c);
  CHECK(ideal_norm(s.ideal) == 12);

  s = spoly(pp(R, "2*x+y"), pp(R, "3*x"));
  CHECK(s.f == parse_poly(R, "y/2"));
  CHECK(s.ideal == zideal(Z, 6));
  auto cs = canonicalize(s);
  CHECK(cs.f == parse_poly(R, "y"));
  CHECK(cs.ideal == zideal(Z, 3));
}

TEST_CASE("product criterion examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  CHECK(product_criterion_applies(pp(R, "2*x+1"), pp(R, "3*y+1")));
  CHECK_FALSE(product_criterion_applies(pp(R, "2*x"), pp(R, "2*y")));
  CHECK_FALSE(product_criterion_applies(pp(R, "2*x"), pp(R, "3*x")));
}

TEST_CASE("buchberger examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto F = basis(R, {pp(R, "x"), pp(R, "y")});
  auto G = buchberger(F);
  REQUIRE(G.size() == 2);
  CHECK(G[0].f == F[0].f);
  CHECK(G[1].f == F[1].f);

  auto F2 = basis(R, {pp(R, "2*x+y"), pp(R, "3*x")});
  CHECK_FALSE(is_groebner(F2));
  G = buchberger(F2);
  CHECK(is_groebner(G));
  bool has_y = false;
  for (const auto& g : G) has_y = has_y || (g.f == parse_poly(R, "y") && g.ideal == zideal(Z, 3));
  CHECK(has_y);
  CHECK(lt_ideal_member(pp(R, "3*x"), G));
  CHECK(lt_ideal_member(pp(R, "2*x"), G));
  CHECK(lt_ideal_member(pp(R, "x"), G));

  oracle::Engine E(oracle::order_of(R->order()));
  auto ref = E.strong_gb(oracle::from_polys(E, {parse_poly(R, "2*x+y"), parse_poly(R, "3*x")}));
  CHECK(oracle::same_lt_ideal(ref, oracle::from_polys(E, expand_to_classical(G))));

  CHECK_THROWS_AS(buchberger(PseudoBasis(R)), DomainError);
}

TEST_CASE("buchberger trace and stats") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto F = basis(R, {pp(R, "2*x+1"), pp(R, "3*y+1")});
  std::ostringstream log;
  BuchbergerOptions opts;
  opts.trace = &log;
  BuchbergerStats st;
  st.record_skipped = true;
  auto G = buchberger(F, opts, &st);
  CHECK(st.pairs_total == 1);
  CHECK(st.pairs_skipped == 1);
  REQUIRE(st.skipped.size() == 1);
  CHECK(log.str().find("product criterion") != std::string::npos);
  opts.use_product_criterion = false;
  opts.trace = nullptr;
  BuchbergerStats st2;
  auto G2 = buchberger(F, opts, &st2);
  CHECK(st2.pairs_skipped == 0);
  CHECK(is_groebner(G2));
  CHECK(same_lt(G, G2));
}

TEST_CASE("is_groebner examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  CHECK(is_groebner(basis(R, {pp(R, "2*x+y")})));
  CHECK_FALSE(is_groebner(basis(R, {pp(R, "2*x+y"), pp(R, "3*x")})));
}

TEST_CASE("expand_to_classical examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x"});
  auto out = expand_to_classical(basis(R, {pp(R, "x", zideal(Z, 2))}));
  REQUIRE(out.size() == 1);
  CHECK(out[0] == parse_poly(R, "2*x"));
  out = expand_to_classical(basis(R, {pp(R, "x")}));
  REQUIRE(out.size() == 1);
  CHECK(out[0] == parse_poly(R, "x"));

  auto K = field_sqrt10();
  auto S = ring(K, {"x"});
  auto P = parse_ideal(K, "2, a");
  out = expand_to_classical(basis(S, {pp(S, "x", P)}));
  REQUIRE(out.size() == 2);
  // the outputs generate P*x
  std::vector<FieldElem> lcs;
  for (const auto& g : out) lcs.push_back(g.lc());
  CHECK(ideal_from_generators(K, lcs) == P);
}

TEST_CASE("strong_basis examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto S = strong_basis(basis(R, {pp(R, "x")}));
  REQUIRE(S.size() == 1);
  CHECK(S[0].f == parse_poly(R, "x"));
  CHECK(S[0].ideal.is_unit());

  S = strong_basis(basis(R, {pp(R, "2*x"), pp(R, "3*x")}));
  bool found = false;
  for (const auto& s : S) found = found || (s.f == parse_poly(R, "x") && s.ideal.is_unit());
  CHECK(found);

  S = strong_basis(basis(R, {pp(R, "2"), pp(R, "x")}));
  REQUIRE(S.size() == 2);
  CHECK(S[0].f.lm() == ExpVec{0, 0});
  CHECK(S[0].ideal == zideal(Z, 2));
  CHECK(S[1].f.lm() == ExpVec{1, 0});
  CHECK(S[1].ideal.is_unit());

  auto big = basis(R, {pp(R, "x^3"), pp(R, "x^2*y"), pp(R, "x*y^2"), pp(R, "y^3")});
  CHECK_THROWS_AS(strong_basis(big, 3), DomainError);
}

TEST_CASE("pseudo_divides") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  CHECK(pseudo_divides(pp(R, "2*x"), pp(R, "4*x*y")));
  CHECK_FALSE(pseudo_divides(pp(R, "2*x"), pp(R, "3*x*y")));
  CHECK_FALSE(pseudo_divides(pp(R, "x*y"), pp(R, "x")));
}

TEST_CASE("is_pseudo_syzygy examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto G = basis(R, {pp(R, "x+1"), pp(R, "y^2-x")});
  std::vector<Poly> koszul{G[1].f, -G[0].f};
  CHECK(is_pseudo_syzygy(koszul, FracIdeal::unit(Z), G));
  std::vector<Poly> bad{parse_poly(R, "1"), Poly::zero(R)};
  CHECK_FALSE(is_pseudo_syzygy(bad, FracIdeal::unit(Z), G));
  std::vector<Poly> short_h{parse_poly(R, "1")};
  CHECK_THROWS_AS(is_pseudo_syzygy(short_h, FracIdeal::unit(Z), G), DomainError);

  // s_ij for the terms (2x, Z), (3y, Z) with the intersection ideal <6>:
  // h = (lcm/LT_1, -lcm/LT_2) = (y/2, -x/3)
  auto T = basis(R, {pp(R, "2*x"), pp(R, "3*y")});
  std::vector<Poly> s{parse_poly(R, "y/2"), parse_poly(R, "-x/3")};
  CHECK(is_pseudo_syzygy(s, zideal(Z, 6), T));
  CHECK_FALSE(is_pseudo_syzygy(s, zideal(Z, 3), T));
}

TEST_CASE("canonicalize examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"});
  auto c = canonicalize(pp(R, "2*x"));
  CHECK(c.f == parse_poly(R, "x"));
  CHECK(c.ideal == zideal(Z, 2));
  auto m = pp(R, "x+3");
  c = canonicalize(m);
  CHECK(c.f == m.f);
  CHECK(c.ideal == m.ideal);
  c = canonicalize(pp(R, "y/2", zideal(Z, 6)));
  CHECK(c.f == parse_poly(R, "y"));
  CHECK(c.ideal == zideal(Z, 3));
  CHECK_THROWS_AS(canonicalize(pseudo(Poly::zero(R))), DomainError);
}

TEST_CASE("coeff_reduce examples") {
  auto Z = field_z();
  auto R = ring(Z, {"x"});
  auto N = zideal(Z, 5);
  auto r = coeff_reduce(pp(R, "7*x+12"), N);
  CHECK(satisfies_invariant(r));
  CHECK(same_module(r, pp(R, "2*x+2")));

  CHECK(coeff_reduce(pp(R, "5*x+10"), N).is_zero());
  CHECK(same_module(coeff_reduce(pp(R, "5*x+11"), N), pp(R, "1/5", zfrac(Z, 5, 1))));
  CHECK(coeff_reduce(pp(R, "x+10", zideal(Z, 5)), N).is_zero());

  // Each reduced coefficient differs from the canonical one by N * I^-1.
  auto K = field_sqrt10();
  auto S = ring(K, {"x"});
  auto q = pp(S, "(12+7*a)*x");
  auto N5 = zideal(K, 5);
  auto rq = coeff_reduce(q, N5);
  CHECK(satisfies_invariant(rq));
  CHECK(rq.ideal == principal_ideal(parse_elem(K, "12+7*a")));
  REQUIRE(rq.f.size() == 1);
  CHECK(ideal_contains(N5, ideal_scale(rq.ideal, rq.f.lc() - FieldElem::one(K))));
  // the reduced module and the reference ((2+2a)x, R) agree modulo N
  auto lhs = ideal_add(ideal_scale(rq.ideal, rq.f.lc()), N5);
  CHECK(lhs == ideal_add(principal_ideal(parse_elem(K, "2+2*a")), N5));
}

TEST_CASE("pseudo invariants on random input") {
  std::mt19937_64 rng(20240601);
  for (const auto& K : {field_z(), field_sqrt10(), field_sqrt_minus5(), field_golden()}) {
    auto R = ring(K, {"x", "y"}, MonomialOrder::degrevlex());
    for (int trial = 0; trial < 12; ++trial) {
      auto p = random_pseudo(rng, R, 4, 2);
      auto q = random_pseudo(rng, R, 3, 2);
      auto g1 = random_pseudo(rng, R, 2, 1);
      REQUIRE(satisfies_invariant(p));
      PseudoBasis G(R);
      G.push_back(q);
      G.push_back(g1);

      auto c = canonicalize(p);
      CHECK(satisfies_invariant(c));
      CHECK(same_module(p, c));
      CHECK(lc_ideal(c) == lc_ideal(p));
      auto cc = canonicalize(c);
      CHECK(cc.f == c.f);
      CHECK(cc.ideal == c.ideal);

      auto s = spoly(p, q);
      CHECK(satisfies_invariant(s));
      CHECK(s.ideal == ideal_intersect(lc_ideal(p), lc_ideal(q)));

      if (can_reduce(p, G).reducible) {
        auto h = reduce_step(p, G);
        CHECK(satisfies_invariant(h));
        CHECK(h.ideal == p.ideal);
        if (!h.is_zero()) CHECK(R->order().less(h.f.lm(), p.f.lm()));
      }
      auto r = reduce_full(p, G);
      CHECK(satisfies_invariant(r));
      if (!r.is_zero()) CHECK_FALSE(can_reduce(r, G).reducible);

      auto N = random_integral_ideal(rng, K, 5);
      auto cr = coeff_reduce(p, N);
      CHECK(satisfies_invariant(cr));
    }
  }
}

TEST_CASE("one-step reduction stays in the ideal over Z") {
  // f - h lies in <G> for reductions with the unit ideal, checked by the
  // integer oracle.
  std::mt19937_64 rng(77);
  auto Z = field_z();
  auto R = ring(Z, {"x", "y"}, MonomialOrder::degrevlex());
  oracle::Engine E(oracle::order_of(R->order()));
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    PseudoBasis G(R);
    G.push_back(pseudo(random_nonzero_poly(rng, R, 2, 1, 4)));
    G.push_back(pseudo(random_nonzero_poly(rng, R, 2, 1, 4)));
    auto p = pseudo(random_nonzero_poly(rng, R, 3, 2, 6));
    if (!can_reduce(p, G).reducible) continue;
    auto h = reduce_step(p, G);
    auto ref = E.strong_gb(oracle::from_polys(E, expand_to_classical(G)));
    auto d = p.f - h.f;
    if (!d.is_zero()) CHECK(E.reduce(oracle::from_poly(E, d), ref).zero());
    ++checked;
  }
  CHECK(checked > 5);
}

TEST_CASE("buchberger properties on random input") {
  std::mt19937_64 rng(4242);
  for (const auto& K : {field_z(), field_sqrt10(), field_sqrt_minus5()}) {
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
      auto R = ring(K, {"x", "y"}, ord);
      for (int trial = 0; trial < 6; ++trial) {
        PseudoBasis F(R);
        F.push_back(pseudo(random_nonzero_poly(rng, R, 2, 1, 3)));
        F.push_back(pseudo(random_nonzero_poly(rng, R, 2, 1, 3)));
        const long n = 2 + static_cast<long>(rng() % 10);
        F.push_back(pseudo(Poly::constant(R, FieldElem::from_rational(K, n))));

        BuchbergerOptions plain;
        auto G = buchberger(F, plain);
        CHECK(is_groebner(G));
        for (const auto& f : F) CHECK(reduce_full(f, G).is_zero());

        BuchbergerOptions nopc;
        nopc.use_product_criterion = false;
        auto G2 = buchberger(F, nopc);
        CHECK(is_groebner(G2));
        CHECK(same_lt(G, G2));

        BuchbergerOptions cond;
        cond.conductor = zideal(K, n);
        auto G3 = buchberger(F, cond);
        CHECK(is_groebner(G3));
        CHECK(same_lt(G, G3));
        for (const auto& f : F) CHECK(reduce_full(f, G3).is_zero());

        // product criterion soundness
        for (std::size_t i = 0; i < G2.size(); ++i) {
          for (std::size_t j = i + 1; j < G2.size(); ++j) {
            if (!product_criterion_applies(G2[i], G2[j])) continue;
            PseudoBasis pair(R);
            pair.push_back(G2[i]);
            pair.push_back(G2[j]);
            CHECK(reduce_full(spoly(G2[i], G2[j]), pair).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("expanded pseudo bases are classical bases over Z") {
  std::mt19937_64 rng(99);
  auto Z = field_z();
  for (auto ord : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block(1)}) {
    auto R = ring(Z, {"x", "y"}, ord);
    oracle::Engine E(oracle::order_of(ord));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Poly> F{random_nonzero_poly(rng, R, 3, 2, 5), random_nonzero_poly(rng, R, 2, 1, 5)};
      PseudoBasis P(R);
      for (const auto& f : F) P.push_back(pseudo(f));
      auto G = buchberger(P);
      auto ref = E.strong_gb(oracle::from_polys(E, F));
      auto mine = oracle::from_polys(E, expand_to_classical(G));
      CHECK(oracle::same_lt_ideal(ref, mine));
    }
  }
}

TEST_CASE("strong basis divides ideal elements") {
  std::mt19937_64 rng(5150);
  for (const auto& K : {field_z(), field_sqrt10(), field_sqrt_minus5()}) {
    auto R = ring(K, {"x", "y"}, MonomialOrder::degrevlex());
    for (int trial = 0; trial < 4; ++trial) {
      PseudoBasis F(R);
      F.push_back(pseudo(random_nonzero_poly(rng, R, 2, 1, 3)));
      F.push_back(pseudo(random_nonzero_poly(rng, R, 2, 1, 3)));
      F.push_back(pseudo(Poly::constant(R, FieldElem::from_rational(K, 2 + static_cast<long>(rng() % 6)))));
      auto G = buchberger(F);
      auto S = strong_basis(G);
      for (const auto& s : S) CHECK(satisfies_invariant(s));
      for (int k = 0; k < 6; ++k) {
        // sum h_i g_i with h_i in g_i-ideal[x]
        Poly f(R);
        for (const auto& g : G) {
          const auto gens = g.ideal.basis();
          Poly h = random_poly(rng, R, 2, 1, 3).scale(gens[rng() % gens.size()]);
          f += h * g.f;
        }
        if (f.is_zero()) continue;
        auto p = pseudo(f);
        bool divided = false;
        for (const auto& s : S) divided = divided || pseudo_divides(s, p);
        CHECK(divided);
      }
    }
  }
}
