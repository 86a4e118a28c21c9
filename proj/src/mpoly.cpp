#include "pgb/mpoly.hpp"

#include <algorithm>

#include "pgb/errors.hpp"

namespace pgb {
namespace {

void require_same_length(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch", "exponent vectors differ in length");
}

int compare_degrevlex(const ExpVec& a, const ExpVec& b, std::size_t from, std::size_t to) {
  int da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = to; i-- > from;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool monomial_divides(const ExpVec& a, const ExpVec& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExpVec monomial_lcm(const ExpVec& a, const ExpVec& b) {
  require_same_length(a, b);
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

ExpVec monomial_quotient(const ExpVec& b, const ExpVec& a) {
  require_same_length(a, b);
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

ExpVec monomial_mul(const ExpVec& a, const ExpVec& b) {
  require_same_length(a, b);
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool monomials_coprime(const ExpVec& a, const ExpVec& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

int total_degree(const ExpVec& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

int MonomialOrder::compare(const ExpVec& a, const ExpVec& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::DegRevLex:
      return compare_degrevlex(a, b, 0, a.size());
    case Kind::Block: {
      const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(block_), a.size());
      const int c = compare_degrevlex(a, b, 0, k);
      return c != 0 ? c : compare_degrevlex(a, b, k, a.size());
    }
  }
  return 0;
}

bool MonomialOrder::eliminates_first(int k, int n) const {
  if (k <= 0 || k >= n) return true;
  switch (kind_) {
    case Kind::Lex:
      return true;
    case Kind::DegRevLex:
      return false;
    case Kind::Block:
      return block_ == k;
  }
  return false;
}

RingPtr PolyRing::create(FieldPtr field, std::vector<std::string> vars, MonomialOrder order) {
  if (order.kind() == MonomialOrder::Kind::Block &&
      (order.block_size() < 0 || order.block_size() > static_cast<int>(vars.size())))
    throw DomainError("invalid order", "block size exceeds the number of variables");
  return RingPtr(new PolyRing(std::move(field), std::move(vars), order));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || a->field() != b->field() || a->vars() != b->vars() || !(a->order() == b->order()))
    throw DomainError("ring mismatch");
}

Poly Poly::constant(const RingPtr& R, const FieldElem& c) {
  return monomial(R, ExpVec(R->nvars(), 0), c);
}

Poly Poly::monomial(const RingPtr& R, ExpVec exp, const FieldElem& c) {
  Poly p(R);
  if (static_cast<int>(exp.size()) != R->nvars()) throw DomainError("dimension mismatch");
  require_same_field(R->field(), c.field());
  if (!c.is_zero()) p.terms_.push_back({std::move(exp), c});
  return p;
}

Poly Poly::variable(const RingPtr& R, int i) {
  ExpVec e(R->nvars(), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(R, std::move(e), FieldElem::one(R->field()));
}

Poly Poly::from_terms(const RingPtr& R, std::vector<Term> terms) {
  const MonomialOrder& ord = R->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ord.compare(x.exp, y.exp) > 0; });
  Poly p(R);
  for (auto& t : terms) {
    if (static_cast<int>(t.exp.size()) != R->nvars()) throw DomainError("dimension mismatch");
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && pgb::total_degree(terms_[0].exp) == 0);
}

const ExpVec& Poly::lm() const { return lt().exp; }
const FieldElem& Poly::lc() const { return lt().coeff; }

const Term& Poly::lt() const {
  if (terms_.empty()) throw DomainError("zero polynomial");
  return terms_.front();
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, pgb::total_degree(t.exp));
  return d;
}

FieldElem Poly::coeff(const ExpVec& exp) const {
  for (const auto& t : terms_) {
    if (t.exp == exp) return t.coeff;
  }
  return FieldElem::zero(field());
}

bool Poly::only_in(std::span<const int> vars) const {
  for (const auto& t : terms_) {
    for (int i = 0; i < static_cast<int>(t.exp.size()); ++i) {
      if (t.exp[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    }
  }
  return true;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& g) {
  return *this = sub_mul_term(ExpVec(ring_->nvars(), 0), -FieldElem::one(field()), g);
}

Poly& Poly::operator-=(const Poly& g) {
  return *this = sub_mul_term(ExpVec(ring_->nvars(), 0), FieldElem::one(field()), g);
}

Poly operator*(const Poly& f, const Poly& g) {
  require_same_ring(f.ring_, g.ring_);
  Poly out(f.ring_);
  if (f.size() > g.size()) return g * f;
  for (const auto& t : f.terms_) out = out.sub_mul_term(t.exp, -t.coeff, g);
  return out;
}

bool operator==(const Poly& f, const Poly& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (f.terms_[i].exp != g.terms_[i].exp || !(f.terms_[i].coeff == g.terms_[i].coeff)) return false;
  }
  return true;
}

Poly Poly::scale(const FieldElem& c) const {
  Poly p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.exp, t.coeff * c});
  return p;
}

Poly Poly::mul_term(const ExpVec& exp, const FieldElem& c) const {
  Poly p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({monomial_mul(t.exp, exp), t.coeff * c});
  return p;
}

Poly Poly::sub_mul_term(const ExpVec& exp, const FieldElem& c, const Poly& g) const {
  require_same_ring(ring_, g.ring_);
  if (c.is_zero() || g.is_zero()) return *this;
  const MonomialOrder& ord = ring_->order();
  const bool shift = pgb::total_degree(exp) != 0;
  Poly out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    ExpVec e = shift ? monomial_mul(g.terms_[j].exp, exp) : g.terms_[j].exp;
    const int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].exp, e);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({std::move(e), -(g.terms_[j].coeff * c)});
      ++j;
    } else {
      FieldElem s = terms_[i].coeff - g.terms_[j].coeff * c;
      if (!s.is_zero()) out.terms_.push_back({std::move(e), std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(elem_inv(lc()));
}

Poly Poly::without_lt() const {
  Poly p(ring_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Poly change_ring(const Poly& f, const RingPtr& target, std::span<const int> var_map) {
  if (static_cast<int>(var_map.size()) != f.ring()->nvars()) throw DomainError("dimension mismatch");
  require_same_field(f.field(), target->field());
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    ExpVec e(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (var_map[i] < 0 || var_map[i] >= target->nvars()) throw DomainError("dimension mismatch", "unmapped variable");
      e[static_cast<std::size_t>(var_map[i])] += t.exp[i];
    }
    terms.push_back({std::move(e), t.coeff});
  }
  return Poly::from_terms(target, std::move(terms));
}

Poly partial_derivative(const Poly& f, int i) {
  if (i < 0 || i >= f.ring()->nvars()) throw DomainError("dimension mismatch", "no such variable");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.exp[i] == 0) continue;
    ExpVec e = t.exp;
    --e[i];
    terms.push_back({std::move(e), t.coeff * FieldElem::from_rational(f.field(), t.exp[i])});
  }
  return Poly::from_terms(f.ring(), std::move(terms));
}

namespace {

Poly determinant(const std::vector<std::vector<Poly>>& M) {
  const std::size_t n = M.size();
  if (n == 1) return M[0][0];
  const RingPtr& R = M[0][0].ring();
  Poly det(R);
  for (std::size_t c = 0; c < n; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(M[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = M[0][c] * determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<Poly> jacobian_minors(std::span<const Poly> F, int r) {
  if (F.empty()) throw DomainError("r out of range", "no polynomials");
  const int n = F[0].ring()->nvars();
  const int m = static_cast<int>(F.size());
  if (r < 1 || r > std::min(m, n)) throw DomainError("r out of range");
  std::vector<std::vector<Poly>> J(F.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) J[i].push_back(partial_derivative(F[i], j));
  }
  std::vector<Poly> out;
  for (const auto& rows : subsets(m, r)) {
    for (const auto& cols : subsets(n, r)) {
      std::vector<std::vector<Poly>> M;
      for (int i : rows) {
        std::vector<Poly> row;
        for (int j : cols) row.push_back(J[i][j]);
        M.push_back(std::move(row));
      }
      out.push_back(determinant(M));
    }
  }
  return out;
}

}  // namespace pgb
