#include "eulerode/document.hpp"

#include "eulerode/error.hpp"
#include "eulerode/text.hpp"

namespace eulerode {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(0, std::string(what) + " must be a \"p/q\" string or an integer");
}

TrigKind kind_from_name(const std::string& s) {
  if (s == "sin") return TrigKind::Sin;
  if (s == "cos") return TrigKind::Cos;
  if (s == "exp") return TrigKind::Exp;
  throw ParseError(0, "term kind must be sin, cos or exp, got '" + s + "'");
}

json decimal(const Rational& r) { return r.to_double(); }

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const BasisTerm& t) {
  return {{"power", t.power},
          {"alpha", to_json(t.alpha)},
          {"beta", to_json(t.beta)},
          {"kind", std::string(trig_kind_name(t.kind))}};
}

json to_json(const RationalFunction& r) {
  return {{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}, {"text", r.to_string()}};
}

json to_json(const SeriesTruncation& s) {
  json a = json::array();
  for (const auto& c : s.coefficients) a.push_back(to_json(c));
  return a;
}

BasisTerm basis_term_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "basis term must be an object");
  const long power = j.value("power", 0L);
  if (power < 0) throw ParseError(0, "term power must be non-negative");
  const Rational alpha = j.contains("alpha") ? rational_from_json(j.at("alpha"), "alpha") : Rational();
  const Rational beta = j.contains("beta") ? rational_from_json(j.at("beta"), "beta") : Rational();
  const TrigKind kind = kind_from_name(j.value("kind", std::string("exp")));
  const auto t = canonical_term(1, static_cast<unsigned>(power), alpha, beta, kind);
  if (!t || t->coef != 1 || t->term.beta != beta || t->term.kind != kind)
    throw ParseError(0, "basis term is not canonical (beta >= 0, and beta > 0 exactly for sin/cos)");
  return t->term;
}

OperatorPolynomial parse_operator(std::string_view text) {
  const std::vector<Rational> a = parse_rational_list(text);
  if (a.size() < 2) throw ParseError(0, "operator needs at least two coefficients a0,a1");
  if (a.back().is_zero()) throw ParseError(text.size(), "leading operator coefficient must be nonzero");
  return OperatorPolynomial(a);
}

MethodChoice parse_method(std::string_view name) {
  if (name == "auto") return MethodChoice::Auto;
  if (name == "direct") return MethodChoice::Direct;
  if (name == "divergent") return MethodChoice::Divergent;
  throw ParseError(0, "method must be auto, direct or divergent");
}

ProblemDocument parse_problem_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError(0, "problem document must be a JSON object");
  if (!doc.contains("operator") || !doc.at("operator").is_array())
    throw ParseError(0, "\"operator\" must be an array of \"p/q\" strings");

  try {
    std::vector<Rational> a;
    for (const auto& c : doc.at("operator")) a.push_back(rational_from_json(c, "operator coefficient"));
    if (a.size() < 2) throw ParseError(0, "operator needs at least two coefficients a0,a1");
    if (a.back().is_zero()) throw ParseError(0, "leading operator coefficient must be nonzero");

    std::vector<Term> rhs;
    const json& r = doc.contains("rhs") ? doc.at("rhs") : json();
    if (r.is_string()) {
      rhs = parse_rhs_expression(r.get<std::string>());
    } else if (r.is_array()) {
      for (const auto& item : r) {
        if (!item.is_object() || !item.contains("term"))
          throw ParseError(0, "structured rhs entries look like {\"coef\": \"p/q\", \"term\": {...}}");
        const Rational coef = item.contains("coef") ? rational_from_json(item.at("coef"), "coef") : Rational(1);
        if (!coef.is_zero()) rhs.push_back({coef, basis_term_from_json(item.at("term"))});
      }
    } else {
      throw ParseError(0, "\"rhs\" must be an expression string or a term list");
    }
    if (rhs.empty()) throw ParseError(0, "right-hand side is empty");

    ProblemDocument out{{OperatorPolynomial(a), std::move(rhs)}, MethodChoice::Auto, std::nullopt,
                        ReportVerbosity::Full};
    if (doc.contains("options")) {
      const json& o = doc.at("options");
      if (!o.is_object()) throw ParseError(0, "\"options\" must be an object");
      if (o.contains("method")) out.method = parse_method(o.at("method").get<std::string>());
      if (o.contains("truncation") && !o.at("truncation").is_null()) {
        const long n = o.at("truncation").get<long>();
        if (n < 0) throw ParseError(0, "truncation must be non-negative");
        out.truncation = static_cast<std::size_t>(n);
      }
      if (o.contains("report")) {
        const std::string v = o.at("report").get<std::string>();
        if (v == "summary")
          out.verbosity = ReportVerbosity::Summary;
        else if (v == "full")
          out.verbosity = ReportVerbosity::Full;
        else
          throw ParseError(0, "report verbosity must be summary or full");
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("schema error: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

json report_to_json(const SolveReport& report, const std::optional<ParticularSolution>& solution,
                    ReportVerbosity verbosity, bool with_decimal) {
  json j;
  j["method"] = std::string(solve_method_name(report.method));
  j["k"] = report.k;
  j["L"] = report.L;
  j["M"] = report.M;
  j["truncation_degree"] = report.truncation_degree;
  j["verified"] = report.verified;

  json basis = json::array();
  for (const auto& t : report.basis.terms()) basis.push_back(to_json(t));
  j["basis"] = basis;

  const auto vec = [](const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
  };
  if (solution) {
    j["solution"] = vec(solution->coords);
    j["solution_text"] = render_solution(*solution);
    if (with_decimal) j["solution_decimal_approx"] = render_solution_decimal(*solution);
  }
  j["unpruned"] = vec(report.unpruned);

  json fractions = json::array();
  for (std::size_t i = 0; i < report.component_fractions.size(); ++i) {
    json f = to_json(report.component_fractions[i]);
    f["approximant"] = i < report.approximant.size() && report.approximant[i];
    fractions.push_back(std::move(f));
  }
  j["component_fractions"] = fractions;
  j["values_at_one"] = vec(report.values_at_one);
  if (with_decimal) {
    json d = json::array();
    for (const auto& v : report.values_at_one) d.push_back(decimal(v));
    j["values_at_one_decimal_approx"] = d;
  }

  json pruned = json::array();
  for (const auto& k : report.kernel_pruned) pruned.push_back({{"index", k.index}, {"value", to_json(k.value)}});
  j["kernel_pruned"] = pruned;

  if (verbosity == ReportVerbosity::Full) {
    json series = json::array();
    for (const auto& row : report.component_series) {
      json r = json::array();
      for (const auto& c : row) r.push_back(to_json(c));
      series.push_back(std::move(r));
    }
    j["component_series"] = series;

    json groups = json::array();
    for (const auto& g : report.groups) {
      json notes = json::array();
      for (const auto& n : g.notes) notes.push_back(n);
      groups.push_back({{"alpha", to_json(g.alpha)},
                        {"beta", to_json(g.beta)},
                        {"k", g.k},
                        {"reduced_operator", to_json(g.reduced_operator)},
                        {"method", std::string(solve_method_name(g.method))},
                        {"offset", g.offset},
                        {"size", g.size},
                        {"L", g.L},
                        {"M", g.M},
                        {"truncation_degree", g.truncation_degree},
                        {"notes", notes}});
    }
    j["groups"] = groups;
  }

  if (report.error_code)
    j["error"] = {{"code", std::string(error_code_name(*report.error_code))}, {"message", report.error_message}};
  return j;
}

}  // namespace eulerode
