#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgb/mpoly.hpp"
#include "pgb/numberfield.hpp"

// Text forms shared by the CLI, fixtures and tests. Field elements are written
// in the generator symbol `a` (theta), polynomials with `+ - * / ^` and
// parentheses, ideals as `ideal(den=<q>; rows=[[...],...])`.

namespace pgb {

inline constexpr std::string_view kGeneratorSymbol = "a";

std::string format_elem(const FieldElem& x);
std::string format_poly(const Poly& f);
std::string format_ideal(const FracIdeal& a);
std::string format_order(const MonomialOrder& o);

FieldElem parse_elem(const FieldPtr& K, std::string_view text);
Poly parse_poly(const RingPtr& R, std::string_view text);
// Either the printed form or a comma-separated list of generators.
FracIdeal parse_ideal(const FieldPtr& K, std::string_view text);
// lex | degrevlex | elim:<k>
MonomialOrder parse_order(std::string_view text);

// Small lexing helpers shared with the problem-file reader.
namespace text {
std::string trim(std::string_view s);
// Splits on `sep` outside (), [] nesting.
std::vector<std::string> split_top_level(std::string_view s, char sep);
Integer parse_integer(std::string_view s);
Rational parse_rational(std::string_view s);
}  // namespace text

}  // namespace pgb
