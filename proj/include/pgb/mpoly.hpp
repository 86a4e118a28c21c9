#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgb/numberfield.hpp"

namespace pgb {

using ExpVec = std::vector<int>;

bool monomial_divides(const ExpVec& a, const ExpVec& b);
ExpVec monomial_lcm(const ExpVec& a, const ExpVec& b);
// b / a, assuming a | b.
ExpVec monomial_quotient(const ExpVec& b, const ExpVec& a);
ExpVec monomial_mul(const ExpVec& a, const ExpVec& b);
bool monomials_coprime(const ExpVec& a, const ExpVec& b);
int total_degree(const ExpVec& a);

// lex compares x0 first. block(k) compares the first k variables by
// degrevlex and only on a tie the remaining ones, also by degrevlex, so any
// monomial involving the first block beats every monomial free of it.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder block(int k) { return {Kind::Block, k}; }

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }

  // -1, 0, 1 as a <, =, > b.
  int compare(const ExpVec& a, const ExpVec& b) const;
  bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }

  // True when, with n variables, every monomial containing one of the first
  // k variables is larger than every monomial free of them.
  bool eliminates_first(int k, int n) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
  Kind kind_;
  int block_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  static RingPtr create(FieldPtr field, std::vector<std::string> vars, MonomialOrder order);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const MonomialOrder& order() const { return order_; }

 private:
  PolyRing(FieldPtr field, std::vector<std::string> vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {}
  FieldPtr field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  ExpVec exp;
  FieldElem coeff;
};

// Sparse polynomial over K: non-zero terms, strictly descending in the
// ring's order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(const RingPtr& R) { return Poly(R); }
  static Poly constant(const RingPtr& R, const FieldElem& c);
  static Poly monomial(const RingPtr& R, ExpVec exp, const FieldElem& c);
  static Poly variable(const RingPtr& R, int i);
  // Sorts and merges arbitrary terms.
  static Poly from_terms(const RingPtr& R, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const FieldPtr& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const ExpVec& lm() const;
  const FieldElem& lc() const;
  const Term& lt() const;
  int total_degree() const;
  // Coefficient of x^exp, zero if absent.
  FieldElem coeff(const ExpVec& exp) const;
  // True when no term involves a variable outside `vars`.
  bool only_in(std::span<const int> vars) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend bool operator==(const Poly& f, const Poly& g);

  Poly scale(const FieldElem& c) const;
  Poly mul_term(const ExpVec& exp, const FieldElem& c) const;
  // f - c * x^exp * g, the workhorse of every reduction.
  Poly sub_mul_term(const ExpVec& exp, const FieldElem& c, const Poly& g) const;
  Poly monic() const;
  Poly without_lt() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Re-embeds f into `target`; variable i of f becomes variable var_map[i].
// A negative entry marks a variable that must not occur in f.
Poly change_ring(const Poly& f, const RingPtr& target, std::span<const int> var_map);

struct FieldGB {
  std::vector<Poly> basis;
  // transform[i][j]: basis[i] = sum_j transform[i][j] * F[j]; empty unless
  // tracking was requested.
  std::vector<std::vector<Poly>> transform;
};

// Reduced (monic, inter-reduced) Groebner basis over K.
FieldGB field_buchberger(std::span<const Poly> F, bool track);
Poly field_normal_form(const Poly& f, const FieldGB& G);
Poly field_normal_form(const Poly& f, std::span<const Poly> G);
// a_i with 1 = sum a_i F_i; DomainError("not unit ideal") otherwise.
std::vector<Poly> lift_one(std::span<const Poly> F);

Poly partial_derivative(const Poly& f, int i);
// All r x r minors of the Jacobian (rows: F, columns: variables), rows and
// columns chosen in lexicographic subset order.
std::vector<Poly> jacobian_minors(std::span<const Poly> F, int r);

}  // namespace pgb
