#include <algorithm>
#include <random>

#include "pgb/errors.hpp"
#include "pgb/numberfield.hpp"

namespace pgb {
namespace {

// Dense univariate polynomials over F_p, ascending coefficients, no trailing
// zeros. p < 2^62 so products fit in 128 bits.
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using FpPoly = std::vector<u64>;

class Fp {
 public:
  explicit Fp(u64 p) : p_(p) {}

  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) + b) % p_); }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : p_ - (b - a); }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

  static void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

  FpPoly monic(FpPoly f) const {
    if (f.empty()) return f;
    const u64 c = inv(f.back());
    for (auto& x : f) x = mul(x, c);
    return f;
  }

  FpPoly sub(FpPoly a, const FpPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }

  FpPoly add(FpPoly a, const FpPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = add(a[i], b[i]);
    trim(a);
    return a;
  }

  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  // a = q*b + r
  std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
    if (b.empty()) throw DomainError("division by zero");
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    FpPoly q(a.size() - b.size() + 1, 0);
    const u64 lc_inv = inv(b.back());
    for (int k = deg(a); k >= db; --k) {
      const u64 c = mul(a[k], lc_inv);
      q[k - db] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) a[k - db + j] = sub(a[k - db + j], mul(c, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
  }

  FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly quo(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).first; }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  FpPoly derivative(const FpPoly& f) const {
    FpPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], static_cast<u64>(i % p_)));
    trim(d);
    return d;
  }

  FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) const {
    FpPoly r{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }

 private:
  u64 p_;
};

// f = prod s_k^k with s_k squarefree and pairwise coprime.
void squarefree_parts(const Fp& F, const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  if (Fp::deg(f) <= 0) return;
  FpPoly c = F.gcd(f, F.derivative(f));
  FpPoly w = F.quo(f, c);
  int i = 1;
  while (Fp::deg(w) > 0) {
    FpPoly y = F.gcd(w, c);
    FpPoly z = F.quo(w, y);
    if (Fp::deg(z) > 0) out.emplace_back(F.monic(z), i * mult);
    ++i;
    w = y;
    c = F.quo(c, y);
  }
  if (Fp::deg(c) > 0) {
    // c is a polynomial in t^p; coefficients are fixed by Frobenius.
    FpPoly root;
    for (std::size_t k = 0; k < c.size(); k += F.p()) root.push_back(c[k]);
    squarefree_parts(F, F.monic(root), mult * static_cast<int>(F.p()), out);
  }
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const Fp& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x{0, 1};
  FpPoly h = x;
  int i = 1;
  while (Fp::deg(f) >= 2 * i) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p())), f);
    FpPoly g = F.gcd(f, F.sub(h, x));
    if (Fp::deg(g) > 0) {
      out.emplace_back(g, i);
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
    ++i;
  }
  if (Fp::deg(f) > 0) out.emplace_back(F.monic(f), Fp::deg(f));
  return out;
}

void equal_degree(const Fp& F, const FpPoly& f, int k, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const int n = Fp::deg(f);
  if (n == k) {
    out.push_back(F.monic(f));
    return;
  }
  Integer pk = 1;
  for (int i = 0; i < k; ++i) pk *= static_cast<unsigned long>(F.p());
  const Integer half = (pk - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p() - 1);
  for (;;) {
    FpPoly a(n);
    for (auto& c : a) c = dist(rng);
    Fp::trim(a);
    if (Fp::deg(a) <= 0) continue;
    FpPoly b;
    if (F.p() == 2) {
      FpPoly t = a;
      b = a;
      for (int j = 1; j < k; ++j) {
        t = F.rem(F.mul(t, t), f);
        b = F.add(b, t);
      }
    } else {
      b = F.sub(F.powmod(a, half, f), FpPoly{1});
    }
    FpPoly g = F.gcd(f, b);
    if (Fp::deg(g) > 0 && Fp::deg(g) < n) {
      equal_degree(F, g, k, rng, out);
      equal_degree(F, F.quo(f, g), k, rng, out);
      return;
    }
  }
}

std::vector<std::pair<FpPoly, int>> factor_mod_p(const Fp& F, const FpPoly& f) {
  std::vector<std::pair<FpPoly, int>> sqf;
  squarefree_parts(F, F.monic(f), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::vector<std::pair<FpPoly, int>> out;
  for (const auto& [s, mult] : sqf) {
    for (const auto& [g, k] : distinct_degree(F, s)) {
      std::vector<FpPoly> irr;
      equal_degree(F, g, k, rng, irr);
      for (auto& q : irr) out.emplace_back(std::move(q), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(),
                                        b.first.rend());
  });
  return out;
}

FieldElem eval_theta_poly(const FieldPtr& K, const std::vector<Integer>& g) {
  FieldElem acc = FieldElem::zero(K);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == 0) continue;
    acc += FieldElem(K, K->theta_power(static_cast<int>(k)) * Rational(g[k]));
  }
  return acc;
}

Integer next_prime(const Integer& n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::vector<PrimeIdeal> prime_decompose(const Integer& p, const FieldPtr& K) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw DomainError("not prime", p.get_str());
  if (p >= (Integer(1) << 62)) throw DomainError("prime too large", p.get_str());
  if (K->index() % p == 0) throw DomainError("index divisor", p.get_str());
  const Fp F(p.get_ui());
  FpPoly m;
  for (const auto& c : K->minpoly()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    m.push_back(r.get_ui());
  }
  Fp::trim(m);

  std::vector<PrimeIdeal> out;
  for (const auto& [g, e] : factor_mod_p(F, m)) {
    PrimeIdeal P;
    P.p = p;
    P.e = e;
    P.f = Fp::deg(g);
    for (u64 c : g) P.generator_poly.emplace_back(static_cast<unsigned long>(c));
    const FieldElem gens[2] = {FieldElem::from_rational(K, Rational(p)),
                               eval_theta_poly(K, P.generator_poly)};
    P.ideal = ideal_from_generators(K, gens);
    out.push_back(std::move(P));
  }
  return out;
}

std::vector<IdealFactor> factor_ideal(const FracIdeal& a, const Integer& bound) {
  if (!a.is_integral()) throw DomainError("not integral");
  const Rational n = ideal_norm(a);
  Integer N = n.get_num();
  std::vector<IdealFactor> out;
  auto split_prime = [&](const Integer& p) {
    for (auto& P : prime_decompose(p, a.field())) {
      int v = 0;
      FracIdeal power = P.ideal;
      while (ideal_contains(power, a)) {
        ++v;
        power = ideal_mul(power, P.ideal);
      }
      if (v == 0) continue;
      Integer pf;
      mpz_pow_ui(pf.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(P.f * v));
      N /= pf;
      out.push_back({std::move(P), v});
    }
  };
  for (Integer p = 2; p <= bound && N > 1; p = next_prime(p)) {
    if (N % p == 0) split_prime(p);
  }
  if (N > 1) {
    if (N <= bound * bound) {
      split_prime(N);
    } else {
      throw DomainError("norm not bound-smooth", "cofactor " + N.get_str());
    }
  }
  if (N != 1) throw DomainError("norm not bound-smooth", "cofactor " + N.get_str());
  return out;
}

}  // namespace pgb
