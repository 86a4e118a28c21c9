#include "pgb/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "pgb/errors.hpp"

namespace pgb {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Integer polynomial in `a` (ascending coefficients) without denominators.
std::string format_integer_poly(const std::vector<Integer>& c) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool neg = c[k] < 0;
    const Integer m = abs(c[k]);
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mono;
    if (k >= 1) mono = std::string(kGeneratorSymbol);
    if (k >= 2) mono += "^" + std::to_string(k);
    if (mono.empty()) {
      out += m.get_str();
    } else if (m == 1) {
      out += mono;
    } else {
      out += m.get_str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

int count_terms(const std::vector<Integer>& c) {
  int n = 0;
  for (const auto& x : c) n += x != 0;
  return n;
}

class Parser {
 public:
  Parser(const RingPtr& R, std::string_view text) : R_(R), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg + " at position " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly constant(const Rational& q) const {
    return Poly::constant(R_, FieldElem::from_rational(R_->field(), q));
  }

  Poly expr() {
    Poly acc(R_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('+')) {
      } else if (accept('-')) {
        neg = true;
      } else if (!first) {
        return acc;
      }
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scale(elem_inv(d.lc()));
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned k = 0;
      auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, k);
      if (ec != std::errc() || k > 100000) fail("exponent out of range");
      Poly r = constant(1);
      for (unsigned i = 0; i < k; ++i) r = r * b;
      return r;
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == kGeneratorSymbol) return Poly::constant(R_, FieldElem::generator(R_->field()));
      const auto& vars = R_->vars();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) return Poly::variable(R_, static_cast<int>(i));
      }
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr R_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

Integer parse_integer(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty()) throw ParseError("expected an integer, got empty text");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw ParseError("expected an integer, got '" + t + "'");
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ParseError("expected an integer, got '" + t + "'");
  }
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

}  // namespace

std::string format_elem(const FieldElem& x) {
  const RatVec p = x.field()->to_power_basis(x.coords());
  const Integer den = common_denominator(p);
  std::vector<Integer> num;
  for (Index i = 0; i < p.size(); ++i) num.push_back(Rational(p(i) * den).get_num());
  const std::string n = format_integer_poly(num);
  if (den == 1) return n;
  if (count_terms(num) <= 1) return n + "/" + den.get_str();
  return "(" + n + ")/" + den.get_str();
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  const auto& vars = f.ring()->vars();
  std::string out;
  for (const auto& t : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    std::string coeff;
    bool neg = false;
    if (t.coeff.is_rational()) {
      Rational q = t.coeff[0];
      neg = q < 0;
      q = abs(q);
      if (!(q == 1 && !mono.empty())) coeff = q.get_str();
    } else {
      coeff = "(" + format_elem(t.coeff) + ")";
    }
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (coeff.empty()) out += mono;
    else if (mono.empty()) out += coeff;
    else out += coeff + "*" + mono;
  }
  return out;
}

std::string format_ideal(const FracIdeal& a) {
  std::ostringstream os;
  os << "ideal(den=" << a.den() << "; rows=[";
  for (Index i = 0; i < a.num().rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (Index j = 0; j < a.num().cols(); ++j) {
      if (j) os << ",";
      os << a.num()(i, j);
    }
    os << "]";
  }
  os << "])";
  return os.str();
}

std::string format_order(const MonomialOrder& o) {
  switch (o.kind()) {
    case MonomialOrder::Kind::Lex:
      return "lex";
    case MonomialOrder::Kind::DegRevLex:
      return "degrevlex";
    case MonomialOrder::Kind::Block:
      return "elim:" + std::to_string(o.block_size());
  }
  return "";
}

Poly parse_poly(const RingPtr& R, std::string_view text) { return Parser(R, text).parse(); }

FieldElem parse_elem(const FieldPtr& K, std::string_view text) {
  Poly p = parse_poly(PolyRing::create(K, {}, MonomialOrder::degrevlex()), text);
  return p.is_zero() ? FieldElem::zero(K) : p.lc();
}

FracIdeal parse_ideal(const FieldPtr& K, std::string_view text) {
  const std::string t = trim(text);
  if (t.rfind("ideal(", 0) == 0) {
    if (t.back() != ')') throw ParseError("ideal: missing ')' in '" + t + "'");
    const std::string body = t.substr(6, t.size() - 7);
    Integer den = 1;
    std::optional<IntMat> rows;
    for (const auto& part : split_top_level(body, ';')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw ParseError("ideal: expected key=value, got '" + part + "'");
      const std::string key = trim(std::string_view(part).substr(0, eq));
      const std::string val = trim(std::string_view(part).substr(eq + 1));
      if (key == "den") {
        den = parse_integer(val);
      } else if (key == "rows") {
        if (val.size() < 2 || val.front() != '[' || val.back() != ']')
          throw ParseError("ideal: rows must be a bracketed list");
        std::vector<std::vector<Integer>> rs;
        for (const auto& r : split_top_level(std::string_view(val).substr(1, val.size() - 2), ',')) {
          if (r.size() < 2 || r.front() != '[' || r.back() != ']')
            throw ParseError("ideal: each row must be bracketed, got '" + r + "'");
          std::vector<Integer> row;
          for (const auto& x : split_top_level(std::string_view(r).substr(1, r.size() - 2), ','))
            row.push_back(parse_integer(x));
          if (static_cast<int>(row.size()) != K->degree())
            throw ParseError("ideal: row length must equal the field degree");
          rs.push_back(std::move(row));
        }
        IntMat M(static_cast<Index>(rs.size()), K->degree());
        for (std::size_t i = 0; i < rs.size(); ++i)
          for (int j = 0; j < K->degree(); ++j) M(static_cast<Index>(i), j) = rs[i][j];
        rows = std::move(M);
      } else {
        throw ParseError("ideal: unknown key '" + key + "'");
      }
    }
    if (!rows) throw ParseError("ideal: missing rows");
    if (den <= 0) throw ParseError("ideal: den must be positive");
    return FracIdeal::from_lattice_checked(K, *rows, den);
  }
  std::vector<FieldElem> gens;
  for (const auto& g : split_top_level(t, ',')) gens.push_back(parse_elem(K, g));
  return ideal_from_generators(K, gens);
}

MonomialOrder parse_order(std::string_view text) {
  const std::string t = trim(text);
  if (t == "lex") return MonomialOrder::lex();
  if (t == "degrevlex") return MonomialOrder::degrevlex();
  if (t.rfind("elim:", 0) == 0) {
    int k = 0;
    const std::string n = t.substr(5);
    auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), k);
    if (ec != std::errc() || ptr != n.data() + n.size() || k < 0)
      throw ParseError("order: bad block size in '" + t + "'");
    return MonomialOrder::block(k);
  }
  throw ParseError("order: expected lex, degrevlex or elim:<k>, got '" + t + "'");
}

namespace text {

std::string trim(std::string_view s) { return ::pgb::trim(s); }

std::vector<std::string> split_top_level(std::string_view s, char sep) { return ::pgb::split_top_level(s, sep); }

Integer parse_integer(std::string_view s) { return ::pgb::parse_integer(std::string(s)); }

Rational parse_rational(std::string_view s) {
  const std::string t = ::pgb::trim(s);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(::pgb::parse_integer(t));
  const Integer d = ::pgb::parse_integer(t.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + t + "'");
  return ratio(::pgb::parse_integer(t.substr(0, slash)), d);
}

}  // namespace text

}  // namespace pgb
