#include "pgb/problem.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pgb/errors.hpp"
#include "pgb/io.hpp"

namespace pgb {
namespace {

using text::trim;

struct Line {
  int number;
  std::string text;
};

std::string strip_comment(const std::string& s) {
  const auto hash = s.find('#');
  return hash == std::string::npos ? s : s.substr(0, hash);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::pair<std::string, std::string> key_value(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) fail(l.number, "expected key = value");
  return {trim(std::string_view(l.text).substr(0, eq)), trim(std::string_view(l.text).substr(eq + 1))};
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool parse_switch(const Line& l, const std::string& v) {
  if (v == "on" || v == "true") return true;
  if (v == "off" || v == "false") return false;
  fail(l.number, "expected on or off, got '" + v + "'");
}

}  // namespace

std::string format_pseudo(const PseudoPoly& p) { return format_poly(p.f) + " ; " + format_ideal(p.ideal); }

PseudoPoly parse_pseudo(const RingPtr& R, std::string_view line) {
  const auto parts = text::split_top_level(line, ';');
  if (parts.size() > 2) throw ParseError("generator: more than one ';' in '" + std::string(line) + "'");
  Poly f = parse_poly(R, parts[0]);
  if (parts.size() == 1) return pseudo(std::move(f));
  std::string spec = parts[1];
  if (spec.rfind("ideal(", 0) != 0) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || trim(std::string_view(spec).substr(0, eq)) != "ideal")
      throw ParseError("generator: expected 'ideal = ...' or 'ideal(...)' after ';'");
    spec = trim(std::string_view(spec).substr(eq + 1));
  }
  FracIdeal I = parse_ideal(R->field(), spec);
  PseudoPoly p = pseudo(std::move(f), std::move(I));
  if (!satisfies_invariant(p)) throw ParseError("generator: ideal * coefficients not integral");
  return p;
}

Problem parse_problem(std::string_view input) {
  std::map<std::string, std::vector<Line>> sections;
  std::string current;
  std::istringstream in{std::string(input)};
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string t = trim(strip_comment(raw));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail(number, "unterminated section header");
      current = trim(std::string_view(t).substr(1, t.size() - 2));
      static const std::set<std::string> known{"field", "ring", "generators", "scheme", "options"};
      if (!known.count(current)) fail(number, "unknown section [" + current + "]");
      if (sections.count(current)) fail(number, "duplicate section [" + current + "]");
      sections[current];
      continue;
    }
    if (current.empty()) fail(number, "content before the first section");
    sections[current].push_back({number, t});
  }

  Problem P;
  std::vector<Integer> minpoly;
  std::optional<RatMat> basis;
  for (const auto& l : sections["field"]) {
    auto [k, v] = key_value(l);
    if (k == "minpoly") {
      for (const auto& w : split_ws(v)) minpoly.push_back(text::parse_integer(w));
    } else if (k == "basis") {
      std::vector<std::vector<Rational>> rows;
      for (const auto& r : text::split_top_level(v, ';')) {
        rows.emplace_back();
        for (const auto& w : split_ws(r)) rows.back().push_back(text::parse_rational(w));
      }
      const Index d = static_cast<Index>(rows.size());
      RatMat B(d, d);
      for (Index i = 0; i < d; ++i) {
        if (static_cast<Index>(rows[i].size()) != d) fail(l.number, "basis must be square");
        for (Index j = 0; j < d; ++j) B(i, j) = rows[i][j];
      }
      basis = B;
    } else {
      fail(l.number, "unknown key '" + k + "' in [field]");
    }
  }
  if (minpoly.empty()) throw ParseError("[field] needs minpoly");
  try {
    P.field = NumberField::create(minpoly, basis);
  } catch (const DomainError& e) {
    throw ParseError(std::string("[field]: ") + e.what());
  }

  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::degrevlex();
  for (const auto& l : sections["ring"]) {
    auto [k, v] = key_value(l);
    if (k == "vars") {
      for (const auto& name : text::split_top_level(v, ',')) {
        if (name.empty()) fail(l.number, "empty variable name");
        if (name == kGeneratorSymbol) fail(l.number, "'a' is reserved for the field generator");
        vars.push_back(name);
      }
    } else if (k == "order") {
      order = parse_order(v);
    } else {
      fail(l.number, "unknown key '" + k + "' in [ring]");
    }
  }
  if (vars.empty()) throw ParseError("[ring] needs vars");
  try {
    P.ring = PolyRing::create(P.field, vars, order);
  } catch (const DomainError& e) {
    throw ParseError(std::string("[ring]: ") + e.what());
  }

  P.generators = PseudoBasis(P.ring);
  for (const auto& l : sections["generators"]) {
    PseudoPoly p;
    try {
      p = parse_pseudo(P.ring, l.text);
    } catch (const ParseError& e) {
      fail(l.number, e.what());
    }
    if (p.is_zero()) fail(l.number, "zero generator");
    P.generators.push_back(std::move(p));
  }

  for (const auto& l : sections["scheme"]) {
    auto [k, v] = key_value(l);
    if (k != "dim") fail(l.number, "unknown key '" + k + "' in [scheme]");
    const Integer d = text::parse_integer(v);
    if (d < 0 || d >= P.ring->nvars()) fail(l.number, "dim must satisfy 0 <= dim < number of variables");
    P.dim = static_cast<int>(d.get_si());
  }

  for (const auto& l : sections["options"]) {
    auto [k, v] = key_value(l);
    if (k == "product_criterion") {
      P.product_criterion = parse_switch(l, v);
    } else if (k == "conductor") {
      P.conductor_off = v == "off";
      P.conductor.reset();
      if (v != "off" && v != "auto") P.conductor = parse_elem(P.field, v);
    } else if (k == "factor_bound") {
      P.factor_bound = text::parse_integer(v);
      if (P.factor_bound < 2) fail(l.number, "factor_bound must be at least 2");
    } else {
      fail(l.number, "unknown key '" + k + "' in [options]");
    }
  }
  return P;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string format_problem(const Problem& P) {
  std::ostringstream out;
  out << "[field]\nminpoly =";
  for (const auto& c : P.field->minpoly()) out << ' ' << c;
  out << "\n";
  const RatMat& B = P.field->basis_matrix();
  if (B != RatMat::Identity(B.rows(), B.cols())) {
    out << "basis =";
    for (Index i = 0; i < B.rows(); ++i) {
      if (i > 0) out << ";";
      for (Index j = 0; j < B.cols(); ++j) out << ' ' << B(i, j);
    }
    out << "\n";
  }
  out << "\n[ring]\nvars = ";
  for (std::size_t i = 0; i < P.ring->vars().size(); ++i) out << (i ? ", " : "") << P.ring->vars()[i];
  out << "\norder = " << format_order(P.ring->order()) << "\n\n[generators]\n";
  for (const auto& g : P.generators) out << format_pseudo(g) << "\n";
  if (P.dim) out << "\n[scheme]\ndim = " << *P.dim << "\n";
  out << "\n[options]\nproduct_criterion = " << (P.product_criterion ? "on" : "off") << "\nconductor = ";
  if (P.conductor_off) {
    out << "off";
  } else if (P.conductor) {
    out << format_elem(*P.conductor);
  } else {
    out << "auto";
  }
  out << "\nfactor_bound = " << P.factor_bound << "\n";
  return out.str();
}

Problem with_order(const Problem& P, const MonomialOrder& order) {
  Problem Q = P;
  Q.ring = PolyRing::create(P.field, P.ring->vars(), order);
  std::vector<int> id(P.ring->vars().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  Q.generators = PseudoBasis(Q.ring);
  for (const auto& g : P.generators) Q.generators.push_back({change_ring(g.f, Q.ring, id), g.ideal});
  return Q;
}

}  // namespace pgb
