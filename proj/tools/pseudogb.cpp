#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgb/apps.hpp"
#include "pgb/errors.hpp"
#include "pgb/io.hpp"
#include "pgb/problem.hpp"

using namespace pgb;

namespace {

struct Settings {
  std::string order;
  bool no_product_criterion = false;
  std::string conductor;  // empty: take the file's setting
  bool canonical = true;
  std::string bound;
};

Problem load(const std::string& path, const Settings& s) {
  Problem P = load_problem(path);
  if (!s.order.empty()) P = with_order(P, parse_order(s.order));
  if (s.no_product_criterion) P.product_criterion = false;
  if (!s.conductor.empty()) {
    P.conductor_off = s.conductor == "off";
    P.conductor.reset();
    if (s.conductor != "off" && s.conductor != "auto") P.conductor = parse_elem(P.field, s.conductor);
  }
  if (!s.bound.empty()) P.factor_bound = text::parse_integer(s.bound);
  return P;
}

BuchbergerOptions options_for(const Problem& P, const PseudoBasis& F, const Settings& s, bool allow_conductor) {
  BuchbergerOptions opts;
  opts.use_product_criterion = P.product_criterion;
  opts.canonicalize = s.canonical;
  if (const char* v = std::getenv("PSEUDOGB_VERBOSE"); v && std::string(v) == "1") opts.trace = &std::cerr;
  if (!allow_conductor || P.conductor_off) return opts;
  if (P.conductor) {
    opts.conductor = principal_ideal(*P.conductor);
  } else {
    opts.conductor = find_conductor_ideal(F);
  }
  return opts;
}

void print_basis(std::ostream& out, const std::string& title, const PseudoBasis& G) {
  out << "[" << title << "] " << G.size() << " elements\n";
  for (const auto& g : G) out << format_pseudo(g) << "\n";
}

void print_conductor(std::ostream& out, const BuchbergerOptions& opts) {
  out << "# conductor: " << (opts.conductor ? format_ideal(*opts.conductor) : "none") << "\n";
}

std::string format_prime(const PrimeIdeal& P, const FieldPtr& K) {
  const auto& g = P.generator_poly;
  std::ostringstream out;
  out << "<" << P.p;
  if (static_cast<int>(g.size()) <= K->degree()) {
    RatVec c = RatVec::Zero(K->degree());
    for (std::size_t i = 0; i < g.size(); ++i) c(static_cast<Index>(i)) = g[i];
    out << ", " << format_elem(FieldElem(K, K->from_power_basis(c)));
  }
  out << ">";
  return out.str();
}

void print_factors(std::ostream& out, const std::vector<IdealFactor>& fs, const FieldPtr& K) {
  out << "factorization:";
  if (fs.empty()) out << " (unit ideal)";
  out << "\n";
  for (const auto& f : fs) {
    out << "  " << format_prime(f.prime, K) << "^" << f.exponent << "  p=" << f.prime.p << " e=" << f.prime.e
        << " f=" << f.prime.f << "  " << format_ideal(f.prime.ideal) << "\n";
  }
}

std::string ring_text(const Problem& P) {
  std::ostringstream out;
  out << "# ring: K[";
  for (std::size_t i = 0; i < P.ring->vars().size(); ++i) out << (i ? ", " : "") << P.ring->vars()[i];
  out << "], order " << format_order(P.ring->order()) << ", minpoly";
  for (const auto& c : P.field->minpoly()) out << ' ' << c;
  return out.str() + "\n";
}

// Moves q's generators into p's ring; the field and variables must agree.
PseudoBasis same_ring_generators(const Problem& p, const Problem& q) {
  if (p.field->minpoly() != q.field->minpoly() || p.field->basis_matrix() != q.field->basis_matrix() ||
      p.ring->vars() != q.ring->vars())
    throw DomainError("ring mismatch", "both files must use the same field and variables");
  PseudoBasis out(p.ring);
  for (const auto& g : q.generators) out.push_back(parse_pseudo(p.ring, format_pseudo(g)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-Groebner bases over rings of integers of number fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--order", s.order, "Monomial order: lex, degrevlex or elim:<k>");
  app.add_flag("--no-product-criterion", s.no_product_criterion, "Do not skip pairs by the product criterion");
  app.add_option("--conductor", s.conductor, "Coefficient reduction ideal: auto, off or an element");
  app.add_flag("--canonical,!--no-canonical", s.canonical, "Canonicalize inserted basis elements (default on)");
  app.add_option("--bound", s.bound, "Trial-division bound for factoring");

  std::string file, file2, poly_text, ideal_text;
  auto* groebner = app.add_subcommand("groebner", "Pseudo-Groebner basis of the generators");
  groebner->add_option("file", file, "Problem file")->required();
  auto* strong = app.add_subcommand("strong-groebner", "Strong pseudo-Groebner basis");
  strong->add_option("file", file, "Problem file")->required();
  auto* member = app.add_subcommand("member", "Ideal membership of a polynomial");
  member->add_option("file", file, "Problem file")->required();
  member->add_option("--poly", poly_text, "Polynomial to test")->required();
  member->add_option("--ideal", ideal_text, "Coefficient ideal of the polynomial");
  auto* intersect = app.add_subcommand("intersect", "Intersection of two ideals");
  intersect->add_option("file1", file, "First problem file")->required();
  intersect->add_option("file2", file2, "Second problem file")->required();
  auto* contract = app.add_subcommand("contract", "Intersection of the ideal with R");
  contract->add_option("file", file, "Problem file")->required();
  auto* bad = app.add_subcommand("bad-primes", "Primes of bad reduction of V(generators)");
  bad->add_option("file", file, "Problem file with a [scheme] section")->required();
  auto* factor = app.add_subcommand("factor-ideal", "Prime factorization of an ideal of R");
  factor->add_option("file", file, "Problem file (only the field is used)")->required();
  factor->add_option("--ideal", ideal_text, "The ideal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostringstream out;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = app.get_subcommands().front()->get_name();
    out << "# pseudogb " << cmd << " " << file << (file2.empty() ? "" : " " + file2) << "\n";
    Problem P = load(file, s);
    out << ring_text(P);

    if (cmd == "groebner" || cmd == "strong-groebner") {
      const auto opts = options_for(P, P.generators, s, true);
      print_conductor(out, opts);
      BuchbergerStats st;
      PseudoBasis G = buchberger(P.generators, opts, &st);
      out << "# pairs: " << st.pairs_total << " considered, " << st.pairs_skipped << " skipped, "
          << st.zero_reductions << " reduced to zero\n";
      if (cmd == "groebner") {
        print_basis(out, "basis", G);
      } else {
        print_basis(out, "strong basis", strong_basis(G));
      }
    } else if (cmd == "member") {
      const auto opts = options_for(P, P.generators, s, true);
      PseudoPoly p = ideal_text.empty() ? pseudo(parse_poly(P.ring, poly_text))
                                        : parse_pseudo(P.ring, poly_text + " ; ideal = " + ideal_text);
      IdealContext ctx(P.generators, opts);
      out << "[member]\n" << format_pseudo(p) << "\n" << (ctx.contains(p) ? "true" : "false") << "\n";
    } else if (cmd == "intersect") {
      Problem Q = load(file2, s);
      const PseudoBasis F2 = same_ring_generators(P, Q);
      const auto opts = options_for(P, P.generators, s, false);
      print_basis(out, "intersection", ideal_intersection(P.generators, F2, opts));
    } else if (cmd == "contract") {
      const auto opts = options_for(P, P.generators, s, true);
      print_conductor(out, opts);
      const auto N = intersect_with_R(P.generators, opts);
      out << "[contraction]\n";
      if (N) {
        out << "ideal: " << format_ideal(*N) << "\nnorm: " << ideal_norm(*N) << "\n";
      } else {
        out << "ideal: 0\nnorm: 0\n";
      }
    } else if (cmd == "bad-primes") {
      if (!P.dim) throw DomainError("dimension mismatch", "bad-primes needs a [scheme] section with dim");
      AffineScheme X{P.generators, *P.dim};
      const PseudoBasis S = singular_ideal(X);
      const auto opts = options_for(P, S, s, true);
      print_conductor(out, opts);
      const auto rep = bad_primes(X, P.factor_bound, opts, false);
      out << "[bad primes]\nideal: " << format_ideal(rep.ideal) << "\nnorm: " << rep.norm << "\n";
      print_factors(out, rep.factors, P.field);
    } else if (cmd == "factor-ideal") {
      const FracIdeal a = parse_ideal(P.field, ideal_text);
      out << "[factor]\nideal: " << format_ideal(a) << "\nnorm: " << ideal_norm(a) << "\n";
      print_factors(out, factor_ideal(a, P.factor_bound), P.field);
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "# time: %.3f s\n", secs);
    out << buf;
    std::cout << out.str();
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.kind() << "\n";
    if (std::string(e.what()) != e.kind()) std::cerr << "  " << e.what() << "\n";
    return 1;
  }
}
