#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulerode/diffop.hpp"
#include "eulerode/solver.hpp"

namespace eulerode {

/// Parses a sum of typical terms, for example
///   "4*exp(2x)*sin(3x) + 2*exp(2x)*cos(3x)"
///   "3*x^2*exp(-x)*cos(2x)"
///   "exp(1/2 x)"
/// term   := [coef] ['*'] factor {['*'] factor}  |  coef
/// factor := 'x' ['^' int] | 'exp(' [rat] ['*'] 'x)' | 'sin(' ... ')' | 'cos(' ... ')'
/// Whitespace is ignored. Throws ParseError carrying the byte offset.
std::vector<Term> parse_rhs_expression(std::string_view text);

/// Renders terms in the given order, e.g. "(2/3)*exp(x)*sin(x) + (1/3)*exp(x)*cos(x)".
/// Zero coefficients are skipped; "0" when nothing is left.
std::string render_terms(const std::vector<Term>& terms);

std::string render_solution(const ParticularSolution& y);

/// Same layout with floating-point coefficients (approximate display only).
std::string render_solution_decimal(const ParticularSolution& y);

/// "a0,a1,...,an" or a JSON-style array of numbers/strings.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace eulerode
