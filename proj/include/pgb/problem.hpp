#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pgb/mpoly.hpp"
#include "pgb/numberfield.hpp"
#include "pgb/pseudo.hpp"

// Problem files: a sectioned, line-oriented text format.
//
//   # comment
//   [field]
//   minpoly = -10 0 1          ascending coefficients, monic
//   basis = 1 0; 1/2 1/2       optional integral basis rows in the power basis
//   [ring]
//   vars = x, y
//   order = degrevlex          lex | degrevlex | elim:<k>
//   [generators]
//   y^2 - x^3 - 2*x            one polynomial per line, ideal R
//   x*y ; ideal = 2, a         optional coefficient ideal (generators)
//   x ; ideal(den=1; rows=[[2,0],[0,1]])
//   [scheme]
//   dim = 1
//   [options]
//   product_criterion = on     on | off
//   conductor = auto           auto | off | <element>
//   factor_bound = 1000

namespace pgb {

struct Problem {
  FieldPtr field;
  RingPtr ring;
  PseudoBasis generators;
  std::optional<int> dim;
  bool product_criterion = true;
  // conductor = off sets conductor_off; an explicit element d means <d>;
  // otherwise the conductor is found automatically.
  bool conductor_off = false;
  std::optional<FieldElem> conductor;
  Integer factor_bound = 1000;
};

// Throws ParseError on malformed input, unknown sections or keys.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);
std::string format_problem(const Problem& p);

// Same problem with its generators moved into a ring with another order.
Problem with_order(const Problem& p, const MonomialOrder& order);

// One basis line: `poly ; ideal(den=..; rows=..)`.
std::string format_pseudo(const PseudoPoly& p);
PseudoPoly parse_pseudo(const RingPtr& R, std::string_view line);

}  // namespace pgb
