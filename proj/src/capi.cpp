#include "eulerode/eulerode.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "eulerode/document.hpp"
#include "eulerode/pade.hpp"
#include "eulerode/series.hpp"
#include "eulerode/solver.hpp"
#include "eulerode/text.hpp"

struct eo_problem {
  eulerode::ProblemDocument doc;
};

struct eo_result {
  eo_status status = EO_OK;
  std::string message;
  eulerode::SolveReport report;
  std::optional<eulerode::ParticularSolution> solution;
  std::string solution_text;
  std::string solution_decimal;
  std::string report_cache;
};

namespace {

thread_local std::string last_error;

eo_status to_status(eulerode::ErrorCode code) {
  using eulerode::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return EO_ERR_PARSE;
    case ErrorCode::InvalidArgument: return EO_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotDefinedAtZero: return EO_ERR_NOT_DEFINED_AT_ZERO;
    case ErrorCode::BasisMismatch: return EO_ERR_BASIS_MISMATCH;
    case ErrorCode::EulerSumUndefined: return EO_ERR_EULER_SUM_UNDEFINED;
    case ErrorCode::InverseExpansionUndefined: return EO_ERR_INVERSE_EXPANSION_UNDEFINED;
    case ErrorCode::PadeDegenerate: return EO_ERR_PADE_DEGENERATE;
    case ErrorCode::OracleDegenerate: return EO_ERR_ORACLE_DEGENERATE;
    case ErrorCode::SummationInconsistent: return EO_ERR_SUMMATION_INCONSISTENT;
    case ErrorCode::ReductionFailed: return EO_ERR_REDUCTION_FAILED;
    case ErrorCode::Internal: return EO_ERR_INTERNAL;
  }
  return EO_ERR_INTERNAL;
}

/// Runs f, mapping exceptions to status codes and recording the message.
template <class F>
eo_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return EO_OK;
  } catch (const eulerode::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return EO_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EO_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw eulerode::Error(eulerode::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* eo_status_name(eo_status status) {
  switch (status) {
    case EO_OK: return "ok";
    case EO_ERR_PARSE: return "parse-error";
    case EO_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case EO_ERR_NOT_DEFINED_AT_ZERO: return "not-defined-at-zero";
    case EO_ERR_BASIS_MISMATCH: return "basis-mismatch";
    case EO_ERR_EULER_SUM_UNDEFINED: return "euler-sum-undefined";
    case EO_ERR_INVERSE_EXPANSION_UNDEFINED: return "inverse-expansion-undefined";
    case EO_ERR_PADE_DEGENERATE: return "pade-degenerate";
    case EO_ERR_ORACLE_DEGENERATE: return "oracle-degenerate";
    case EO_ERR_SUMMATION_INCONSISTENT: return "summation-inconsistent";
    case EO_ERR_REDUCTION_FAILED: return "reduction-failed";
    case EO_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* eo_last_error(void) { return last_error.c_str(); }

void eo_string_free(char* s) { std::free(s); }

eo_status eo_problem_from_json(const char* json_text, eo_problem** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = nullptr;
    *out = new eo_problem{eulerode::parse_problem_document(json_text)};
  });
}

eo_status eo_problem_from_expr(const char* operator_coeffs, const char* rhs_expr, eo_problem** out) {
  return guarded([&] {
    require(operator_coeffs, "operator_coeffs");
    require(rhs_expr, "rhs_expr");
    require(out, "out");
    *out = nullptr;
    auto phi = eulerode::parse_operator(operator_coeffs);
    auto rhs = eulerode::parse_rhs_expression(rhs_expr);
    if (rhs.empty()) throw eulerode::ParseError(0, "right-hand side is identically zero");
    *out = new eo_problem{{{std::move(phi), std::move(rhs)},
                           eulerode::MethodChoice::Auto,
                           std::nullopt,
                           eulerode::ReportVerbosity::Full}};
  });
}

void eo_problem_free(eo_problem* problem) { delete problem; }

eo_method eo_problem_method(const eo_problem* problem) {
  if (!problem) return EO_METHOD_AUTO;
  switch (problem->doc.method) {
    case eulerode::MethodChoice::Direct: return EO_METHOD_DIRECT;
    case eulerode::MethodChoice::Divergent: return EO_METHOD_DIVERGENT;
    case eulerode::MethodChoice::Auto: break;
  }
  return EO_METHOD_AUTO;
}

long eo_problem_truncation(const eo_problem* problem) {
  if (!problem || !problem->doc.truncation) return -1;
  return static_cast<long>(*problem->doc.truncation);
}

eo_verbosity eo_problem_verbosity(const eo_problem* problem) {
  if (problem && problem->doc.verbosity == eulerode::ReportVerbosity::Summary) return EO_REPORT_SUMMARY;
  return EO_REPORT_FULL;
}

eo_status eo_solve(const eo_problem* problem, eo_method method, long truncation, eo_result** out) {
  eo_result* result = nullptr;
  const eo_status status = guarded([&] {
    require(problem, "problem");
    require(out, "out");
    *out = nullptr;
    result = new eo_result();
    std::optional<std::size_t> n;
    if (truncation >= 0) n = static_cast<std::size_t>(truncation);
    try {
      eulerode::SolveOutcome o;
      switch (method) {
        case EO_METHOD_DIRECT: o = eulerode::solve_direct(problem->doc.problem); break;
        case EO_METHOD_DIVERGENT: o = eulerode::solve_divergent(problem->doc.problem, n); break;
        default: o = eulerode::solve_auto(problem->doc.problem, n); break;
      }
      result->solution_text = eulerode::render_solution(o.solution);
      result->solution_decimal = eulerode::render_solution_decimal(o.solution);
      result->solution = std::move(o.solution);
      result->report = std::move(o.report);
    } catch (const eulerode::SolveError& e) {
      result->report = e.report();
      throw;
    }
  });
  if (result) {
    result->status = status;
    if (status != EO_OK) result->message = last_error;
    *out = result;
  }
  return status;
}

void eo_result_free(eo_result* result) { delete result; }

eo_status eo_result_status(const eo_result* result) { return result ? result->status : EO_ERR_INVALID_ARGUMENT; }

const char* eo_result_message(const eo_result* result) { return result ? result->message.c_str() : ""; }

const char* eo_result_solution(const eo_result* result) { return result ? result->solution_text.c_str() : ""; }

const char* eo_result_solution_decimal(const eo_result* result) {
  return result ? result->solution_decimal.c_str() : "";
}

const char* eo_result_report(const eo_result* result, eo_verbosity verbosity, int with_decimal) {
  if (!result) return "";
  auto* r = const_cast<eo_result*>(result);
  const eo_status status = guarded([&] {
    auto v = verbosity == EO_REPORT_SUMMARY ? eulerode::ReportVerbosity::Summary : eulerode::ReportVerbosity::Full;
    r->report_cache = eulerode::report_to_json(r->report, r->solution, v, with_decimal != 0).dump(2);
  });
  if (status != EO_OK) r->report_cache = "{}";
  return r->report_cache.c_str();
}

eo_status eo_pade(const char* coeffs, unsigned L, unsigned M, int use_oracle, char** out_text, char** out_json) {
  return guarded([&] {
    require(coeffs, "coeffs");
    const eulerode::PadeRequest req(eulerode::parse_rational_list(coeffs), L, M);
    nlohmann::json j;
    eulerode::RationalFunction f;
    if (use_oracle) {
      f = eulerode::pade_determinant_oracle(req);
      j = eulerode::to_json(f);
    } else {
      const eulerode::PadeResult r = eulerode::pade_approximant(req);
      f = r.fraction;
      j = eulerode::to_json(f);
      j["approximant"] = !r.matches_series;
      j["L_used"] = r.L_used;
      j["M_used"] = r.M_used;
    }
    if (out_text) *out_text = dup(f.to_string());
    if (out_json) *out_json = dup(j.dump());
  });
}

eo_status eo_euler_sum(const char* coeffs, unsigned L, unsigned M, char** out) {
  return guarded([&] {
    require(coeffs, "coeffs");
    require(out, "out");
    eulerode::SeriesTruncation s{eulerode::parse_rational_list(coeffs), std::nullopt};
    *out = dup(eulerode::euler_sum(s, L, M).to_string());
  });
}

eo_status eo_cesaro_means(const char* coeffs, unsigned upto, char** out_json) {
  return guarded([&] {
    require(coeffs, "coeffs");
    require(out_json, "out_json");
    const auto means = eulerode::cesaro_means(eulerode::parse_rational_list(coeffs), upto);
    nlohmann::json a = nlohmann::json::array();
    for (const auto& m : means) a.push_back(m.to_string());
    *out_json = dup(a.dump());
  });
}

eo_status eo_expand(const char* num_coeffs, const char* den_coeffs, unsigned n, char** out_json) {
  return guarded([&] {
    require(num_coeffs, "num_coeffs");
    require(den_coeffs, "den_coeffs");
    require(out_json, "out_json");
    const auto r = eulerode::ratfun_normalize(eulerode::Poly(eulerode::parse_rational_list(num_coeffs)),
                                              eulerode::Poly(eulerode::parse_rational_list(den_coeffs)));
    *out_json = dup(eulerode::to_json(eulerode::maclaurin_coeffs(r, n)).dump());
  });
}

eo_status eo_convergence_radius(const char* den_coeffs, double tol, double* out, int* unbounded) {
  return guarded([&] {
    require(den_coeffs, "den_coeffs");
    require(out, "out");
    const auto est = eulerode::convergence_radius(eulerode::Poly(eulerode::parse_rational_list(den_coeffs)), tol);
    *out = est.value;
    if (unbounded) *unbounded = est.unbounded ? 1 : 0;
    if (!est.reliable) last_error = "root polishing did not reach the requested tolerance";
  });
}

}  // extern "C"
