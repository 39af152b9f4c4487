#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerode/document.hpp"
#include "eulerode/error.hpp"
#include "eulerode/text.hpp"
#include "support/testkit.hpp"

using namespace eulerode;

namespace {

std::size_t parse_error_position(std::string_view text) {
  try {
    parse_rhs_expression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

ErrorCode document_error(std::string_view json) {
  try {
    parse_problem_document(json);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << json);
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse typical terms") {
  const auto t = parse_rhs_expression("exp(x)*sin(x) - 2*exp(x)*cos(x)");
  REQUIRE(t.size() == 2);
  CHECK(t[0].coef == 1);
  CHECK(t[0].term == BasisTerm{0, 1, 1, TrigKind::Sin});
  CHECK(t[1].coef == -2);
  CHECK(t[1].term == BasisTerm{0, 1, 1, TrigKind::Cos});

  const auto h = parse_rhs_expression("exp(1/2 x)");
  REQUIRE(h.size() == 1);
  CHECK(h[0].term == BasisTerm{0, Rational(1, 2), 0, TrigKind::Exp});

  const auto c = parse_rhs_expression("3*x^2*exp(-x)*cos(2x)");
  REQUIRE(c.size() == 1);
  CHECK(c[0].coef == 3);
  CHECK(c[0].term == BasisTerm{2, -1, 2, TrigKind::Cos});
  CHECK(render_terms(c) == "3*x^2*exp(-x)*cos(2x)");
}

TEST_CASE("grammar variants") {
  CHECK(render_terms(parse_rhs_expression("  4 * exp( 2x ) * sin( 3 x )+2*exp(2*x)*cos(3x) ")) ==
        "4*exp(2x)*sin(3x) + 2*exp(2x)*cos(3x)");
  CHECK(render_terms(parse_rhs_expression("-x")) == "-x");
  CHECK(render_terms(parse_rhs_expression("5")) == "5");
  CHECK(render_terms(parse_rhs_expression("(1/3)*x*x")) == "(1/3)*x^2");
  CHECK(render_terms(parse_rhs_expression("0.5*sin(-x)")) == "-(1/2)*sin(x)");
  CHECK(render_terms(parse_rhs_expression("cos(0x) + sin(0x)")) == "1");
  CHECK(render_terms(parse_rhs_expression("exp(x)*exp(x)")) == "exp(2x)");
  CHECK(render_terms(parse_rhs_expression("x exp(x)")) == "x*exp(x)");
  CHECK(render_terms(parse_rhs_expression("exp((-3/2)x)")) == "exp(-3/2 x)");
  CHECK(render_terms(parse_rhs_expression("2 - 2")) == "2 - 2");
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("sin(x)*cos(x)") == 7);
  CHECK(parse_error_position("exp(x) + tan(x)") == 9);
  CHECK(parse_error_position("exp(x") == 5);
  CHECK(parse_error_position("x^-1") == 2);
  CHECK(parse_error_position("x^1.5") == 2);
  CHECK(parse_error_position("exp(y)") == 4);
  CHECK(parse_error_position("2 3") == 2);
  CHECK(parse_error_position("1/0*x") == 0);
  CHECK(parse_error_position("exp(pi x)") == 4);
}

TEST_CASE("render") {
  const FunctionSpaceBasis b({BasisTerm{0, 1, 1, TrigKind::Sin}, BasisTerm{0, 1, 1, TrigKind::Cos}});
  CHECK(render_solution({b, {Rational(2, 3), Rational(1, 3)}}) == "(2/3)*exp(x)*sin(x) + (1/3)*exp(x)*cos(x)");
  CHECK(render_solution({b, {0, 0}}) == "0");
  CHECK(render_solution({b, {0, -1}}) == "-exp(x)*cos(x)");
  CHECK(render_solution_decimal({b, {Rational(2, 3), 0}}) == "0.666666666667*exp(x)*sin(x)");
  CHECK_THROWS_AS(render_solution({b, {1}}), Error);
}

TEST_CASE("parse-render-parse fixpoint") {
  const std::vector<std::string> corpus = {
      "(2/3)*exp(x)*sin(x) + (1/3)*exp(x)*cos(x)",
      "(1/3)*x*exp(2x)*sin(3x) - (2/3)*x*exp(2x)*cos(3x)",
      "(1/3)*x*exp(2x)*sin(3x) - (2/3)*x*exp(2x)*cos(3x) + (2/9)*exp(2x)*sin(3x) + (1/9)*exp(2x)*cos(3x)",
      "2*exp(1/2 x)",
      "(1/2)*exp(x)",
      "-exp(x)",
      "(1/2)*x^2*exp(x)",
      "exp(x)*sin(x) - 2*exp(x)*cos(x)",
      "4*exp(2x)*sin(3x) + 2*exp(2x)*cos(3x)",
      "3*x^2*exp(-x)*cos(2x)",
      "0",
  };
  for (const auto& s : corpus) {
    CAPTURE(s);
    const std::string once = render_terms(parse_rhs_expression(s));
    CHECK(once == s);
    CHECK(render_terms(parse_rhs_expression(once)) == once);
  }

  testkit::Rng rng(501);
  for (int i = 0; i < 200; ++i) {
    std::vector<Term> terms;
    const int n = static_cast<int>(rng.integer(1, 4));
    for (int j = 0; j < n; ++j) {
      const auto kind = static_cast<TrigKind>(rng.integer(0, 2));
      auto t = canonical_term(rng.nonzero_rational(9, 7), static_cast<unsigned>(rng.integer(0, 3)),
                              rng.rational(5, 3), kind == TrigKind::Exp ? Rational() : rng.nonzero_rational(5, 3), kind);
      if (t) terms.push_back(*t);
    }
    const std::string s = render_terms(terms);
    CAPTURE(s);
    CHECK(render_terms(parse_rhs_expression(s)) == s);
  }
}

TEST_CASE("rational lists") {
  CHECK(parse_rational_list("1,-1,-1") == std::vector<Rational>{1, -1, -1});
  CHECK(parse_rational_list(" [\"1/2\", 3 , -4/6] ") == std::vector<Rational>{Rational(1, 2), 3, Rational(-2, 3)});
  CHECK(parse_rational_list("").empty());
  CHECK(parse_rational_list("[]").empty());
  CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_rational_list("[1,2"), ParseError);
}

TEST_CASE("problem documents") {
  const auto doc = parse_problem_document(R"j({
    "operator": ["1", "-1", "-1"],
    "rhs": "exp(x)*sin(x) - 2*exp(x)*cos(x)",
    "options": {"method": "divergent", "truncation": 6, "report": "summary"}
  })j");
  CHECK(doc.problem.phi.poly() == Poly{1, -1, -1});
  CHECK(doc.problem.rhs.size() == 2);
  CHECK(doc.method == MethodChoice::Divergent);
  CHECK(doc.truncation == 6u);
  CHECK(doc.verbosity == ReportVerbosity::Summary);

  const auto structured = parse_problem_document(R"j({
    "operator": ["13", "-4", 1],
    "rhs": [{"coef": "4", "term": {"power": 0, "alpha": "2", "beta": "3", "kind": "sin"}},
            {"coef": "2", "term": {"alpha": "2", "beta": "3", "kind": "cos"}}]
  })j");
  CHECK(render_terms(structured.problem.rhs) == "4*exp(2x)*sin(3x) + 2*exp(2x)*cos(3x)");
  CHECK(structured.method == MethodChoice::Auto);
  CHECK_FALSE(structured.truncation);

  CHECK(document_error(R"j({"operator": ["1"], "rhs": "exp(x)"})j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "0"], "rhs": "exp(x)"})j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "1"], "rhs": []})j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "1"], "rhs": "sin(0x)"})j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "1"]})j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "1"], "rhs": "exp(x)", "options": {"method": "magic"}})j") ==
        ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "1"], "rhs": "exp(x)",)j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "x"], "rhs": "exp(x)"})j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "1"], "rhs": [{"term": {"kind": "sin"}}]})j") == ErrorCode::Parse);
  CHECK(document_error(R"j({"operator": ["1", "1"], "rhs": [{"term": {"beta": "-1", "kind": "cos"}}]})j") ==
        ErrorCode::Parse);

  CHECK(parse_operator("1, -1").poly() == Poly{1, -1});
  CHECK_THROWS_AS(parse_operator("3"), ParseError);
  CHECK_THROWS_AS(parse_operator("1,0"), ParseError);
}

TEST_CASE("report json") {
  const auto doc = parse_problem_document(R"j({"operator": ["1","-1","-1"], "rhs": "exp(x)*sin(x) - 2*exp(x)*cos(x)"})j");
  const auto out = solve_divergent(doc.problem, 6);
  const auto j = report_to_json(out.report, out.solution, ReportVerbosity::Full, true);
  CHECK(j["method"] == "divergent");
  CHECK(j["solution"] == nlohmann::json::array({"2/3", "1/3"}));
  CHECK(j["solution_text"] == "(2/3)*exp(x)*sin(x) + (1/3)*exp(x)*cos(x)");
  CHECK(j["component_fractions"][0]["num"] == nlohmann::json::array({"1", "1", "4"}));
  CHECK(j["component_fractions"][0]["den"] == nlohmann::json::array({"1", "-2", "2", "4", "4"}));
  CHECK(j["component_fractions"][1]["approximant"] == false);
  CHECK(j["values_at_one"] == nlohmann::json::array({"2/3", "1/3"}));
  CHECK(j["component_series"][1][6] == "-104");
  CHECK(j["basis"][0]["kind"] == "sin");
  CHECK(j.contains("solution_decimal_approx"));
  CHECK_FALSE(j.contains("error"));

  const auto s = report_to_json(out.report, std::nullopt, ReportVerbosity::Summary, false);
  CHECK_FALSE(s.contains("component_series"));
  CHECK_FALSE(s.contains("solution"));
}
