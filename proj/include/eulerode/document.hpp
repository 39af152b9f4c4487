#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "eulerode/series.hpp"
#include "eulerode/solver.hpp"

namespace eulerode {

enum class MethodChoice { Auto, Direct, Divergent };

enum class ReportVerbosity { Summary, Full };

/// Parsed problem document. JSON layout (see docs/formats.md):
///   {"operator": ["1","-1","-1"],
///    "rhs": "exp(x)*sin(x) - 2*exp(x)*cos(x)"   or   [{"coef": "1", "term": {...}}, ...],
///    "options": {"method": "auto|direct|divergent", "truncation": 6, "report": "summary|full"}}
struct ProblemDocument {
  ODEProblem problem;
  MethodChoice method = MethodChoice::Auto;
  std::optional<std::size_t> truncation;
  ReportVerbosity verbosity = ReportVerbosity::Full;
};

/// Throws ParseError for malformed JSON, schema violations, an operator list
/// shorter than two entries or with a zero last entry, and an empty rhs.
ProblemDocument parse_problem_document(std::string_view json_text);

/// Operator "a0,a1,...,an" (n >= 1, a_n != 0) for the expression route.
OperatorPolynomial parse_operator(std::string_view text);

MethodChoice parse_method(std::string_view name);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const BasisTerm& t);
nlohmann::json to_json(const RationalFunction& r);
nlohmann::json to_json(const SeriesTruncation& s);
BasisTerm basis_term_from_json(const nlohmann::json& j);

/// SolveReport fields plus the rendered solution. `decimal` adds float
/// renderings marked as approximate.
nlohmann::json report_to_json(const SolveReport& report, const std::optional<ParticularSolution>& solution,
                              ReportVerbosity verbosity, bool decimal);

}  // namespace eulerode
