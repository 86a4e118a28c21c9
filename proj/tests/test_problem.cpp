#include "doctest.h"
#include "pgb/errors.hpp"
#include "pgb/io.hpp"
#include "pgb/problem.hpp"

using namespace pgb;

namespace {

const char* kCurve = R"(# a comment
[field]
minpoly = -10 0 1

[ring]
vars = x, y
order = elim:1

[generators]
y^2 - x^3 - (1728*a+3348)*x - (44928*a-324432)
2*x*y ; ideal = 1/2, a/2    # trailing comment

[scheme]
dim = 1

[options]
product_criterion = off
conductor = 6
factor_bound = 50
)";

bool same_problem(const Problem& p, const Problem& q) {
  if (p.field->minpoly() != q.field->minpoly() || p.field->basis_matrix() != q.field->basis_matrix()) return false;
  if (p.ring->vars() != q.ring->vars() || !(p.ring->order() == q.ring->order())) return false;
  if (p.generators.size() != q.generators.size()) return false;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (format_pseudo(p.generators[i]) != format_pseudo(q.generators[i])) return false;
  }
  // the two problems own distinct field objects, so compare printed forms
  const bool same_conductor = p.conductor.has_value() == q.conductor.has_value() &&
                              (!p.conductor || format_elem(*p.conductor) == format_elem(*q.conductor));
  return p.dim == q.dim && p.product_criterion == q.product_criterion && p.conductor_off == q.conductor_off &&
         same_conductor && p.factor_bound == q.factor_bound;
}

}  // namespace

TEST_CASE("parse a full problem") {
  const Problem P = parse_problem(kCurve);
  CHECK(P.field->degree() == 2);
  CHECK(P.ring->nvars() == 2);
  CHECK(P.ring->order() == MonomialOrder::block(1));
  REQUIRE(P.generators.size() == 2);
  CHECK(P.generators[0].ideal.is_unit());
  CHECK(!P.generators[1].ideal.is_integral());
  CHECK(P.dim == 1);
  CHECK(!P.product_criterion);
  REQUIRE(P.conductor);
  CHECK(*P.conductor == FieldElem::from_rational(P.field, 6));
  CHECK(P.factor_bound == 50);
}

TEST_CASE("format and parse round trip") {
  const Problem P = parse_problem(kCurve);
  const Problem Q = parse_problem(format_problem(P));
  CHECK(same_problem(P, Q));
  CHECK(format_problem(Q) == format_problem(P));

  const char* golden = "[field]\nminpoly = -5 0 1\nbasis = 1 0; 1/2 1/2\n[ring]\nvars = x\n[generators]\nx^2 - x - 1\n"
                       "[options]\nconductor = off\n";
  const Problem G = parse_problem(golden);
  CHECK(G.conductor_off);
  CHECK(same_problem(G, parse_problem(format_problem(G))));
}

TEST_CASE("pseudo lines round trip") {
  const Problem P = parse_problem(kCurve);
  for (const auto& g : P.generators) {
    const PseudoPoly back = parse_pseudo(P.ring, format_pseudo(g));
    CHECK(back.f == g.f);
    CHECK(back.ideal == g.ideal);
  }
}

TEST_CASE("with_order keeps the generators") {
  const Problem P = parse_problem(kCurve);
  const Problem L = with_order(P, MonomialOrder::lex());
  CHECK(L.ring->order() == MonomialOrder::lex());
  REQUIRE(L.generators.size() == P.generators.size());
  CHECK(format_poly(L.generators[1].f) == format_poly(P.generators[1].f));
}

TEST_CASE("malformed problems") {
  auto fails_with = [](const std::string& text, const std::string& fragment) {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return std::string(e.what()).find(fragment) != std::string::npos;
    }
    return false;
  };
  const std::string head = "[field]\nminpoly = -10 0 1\n[ring]\nvars = x, y\n";
  CHECK(fails_with(head + "[colours]\n", "unknown section"));
  CHECK(fails_with(head + "[options]\ncolour = red\n", "line 6: unknown key 'colour'"));
  CHECK(fails_with("[ring]\nvars = x\n", "minpoly"));
  CHECK(fails_with("[field]\nminpoly = 0 1\n[ring]\nvars = a\n", "reserved"));
  CHECK(fails_with(head + "[generators]\nx + \n", "line 6"));
  CHECK(fails_with(head + "[generators]\nx ; ideal = 1/3\n[options]\n", "not integral"));
  CHECK(fails_with(head + "[scheme]\ndim = 2\n", "dim must satisfy"));
  CHECK(fails_with(head + "[options]\nfactor_bound = 1\n", "at least 2"));
  CHECK(fails_with(head + "[options]\nproduct_criterion = maybe\n", "on or off"));
  CHECK(fails_with("x\n", "before the first section"));
  CHECK(fails_with(head + "[ring]\n", "duplicate section"));
  CHECK_THROWS_AS(load_problem("/nonexistent/file.pgb"), ParseError);
}
