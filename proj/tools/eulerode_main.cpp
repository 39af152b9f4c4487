// eulerode command line: solve, pade, sum, expand.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eulerode/eulerode.h"

namespace {

int exit_code(eo_status s) {
  switch (s) {
    case EO_OK:
      return 0;
    case EO_ERR_PARSE:
    case EO_ERR_INVALID_ARGUMENT:
    case EO_ERR_NOT_DEFINED_AT_ZERO:
    case EO_ERR_BASIS_MISMATCH:
      return 2;
    case EO_ERR_EULER_SUM_UNDEFINED:
      return 3;
    case EO_ERR_INVERSE_EXPANSION_UNDEFINED:
      return 4;
    default:
      return 5;
  }
}

int fail(eo_status s, const char* message) {
  std::cerr << "eulerode: error [" << eo_status_name(s) << "]: " << message << "\n";
  return exit_code(s);
}

struct Owned {
  char* p = nullptr;
  ~Owned() { eo_string_free(p); }
};

struct SolveArgs {
  std::string method = "auto";
  long truncation = -1;
  std::string report_file;
  bool decimal = false;
  std::string json_file;
  std::string expr;
  std::string op;
};

int run_solve(const SolveArgs& a, const CLI::Option* method_opt, const CLI::Option* trunc_opt,
              const CLI::Option* report_opt) {
  eo_problem* problem = nullptr;
  eo_status s;
  if (!a.json_file.empty()) {
    std::ifstream in(a.json_file);
    if (!in) {
      std::cerr << "eulerode: cannot read " << a.json_file << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    s = eo_problem_from_json(buf.str().c_str(), &problem);
  } else {
    s = eo_problem_from_expr(a.op.c_str(), a.expr.c_str(), &problem);
  }
  if (s != EO_OK) return fail(s, eo_last_error());

  eo_method method = eo_problem_method(problem);
  if (method_opt->count()) {
    method = a.method == "direct" ? EO_METHOD_DIRECT : a.method == "divergent" ? EO_METHOD_DIVERGENT : EO_METHOD_AUTO;
  }
  const long truncation = trunc_opt->count() ? a.truncation : eo_problem_truncation(problem);
  const eo_verbosity verbosity = eo_problem_verbosity(problem);

  eo_result* result = nullptr;
  s = eo_solve(problem, method, truncation, &result);
  eo_problem_free(problem);
  if (!result) return fail(s, eo_last_error());

  if (s == EO_OK) {
    std::cout << eo_result_solution(result) << "\n";
    if (a.decimal) std::cout << "approx: " << eo_result_solution_decimal(result) << "\n";
  }
  int code = s == EO_OK ? 0 : fail(s, eo_result_message(result));

  if (report_opt->count()) {
    const char* report = eo_result_report(result, verbosity, a.decimal ? 1 : 0);
    if (a.report_file.empty() || a.report_file == "-") {
      std::cout << report << "\n";
    } else {
      std::ofstream out(a.report_file);
      if (!(out << report << "\n")) {
        std::cerr << "eulerode: cannot write " << a.report_file << "\n";
        if (code == 0) code = 5;
      }
    }
  }
  eo_result_free(result);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact particular solutions of linear constant-coefficient ODEs"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Particular solution of phi(D) y = f(x)");
  auto* method_opt = solve->add_option("--method", sa.method, "direct, divergent or auto")
                         ->check(CLI::IsMember({"direct", "divergent", "auto"}));
  auto* trunc_opt = solve->add_option("--truncation", sa.truncation, "Series truncation degree")->check(CLI::NonNegativeNumber);
  auto* report_opt = solve->add_option("--report", sa.report_file, "JSON report to FILE (stdout when omitted)")
                         ->expected(0, 1);
  solve->add_flag("--decimal", sa.decimal, "Add approximate float renderings");
  auto* json_opt = solve->add_option("--json", sa.json_file, "Problem document");
  auto* expr_opt = solve->add_option("--expr", sa.expr, "Right-hand side, e.g. \"exp(x)*sin(x)\"");
  auto* op_opt = solve->add_option("--operator", sa.op, "Operator coefficients a0,a1,...,an");
  json_opt->excludes(expr_opt)->excludes(op_opt);
  expr_opt->needs(op_opt);
  op_opt->needs(expr_opt);

  std::string coeffs;
  unsigned L = 0, M = 0;
  bool oracle = false;
  auto* pade = app.add_subcommand("pade", "Pade fraction [L/M] of a coefficient list");
  pade->add_option("--coeffs", coeffs, "c0,c1,...")->required();
  pade->add_option("-L", L, "Numerator degree")->required();
  pade->add_option("-M", M, "Denominator degree")->required();
  pade->add_flag("--oracle", oracle, "Use the determinant formula");

  bool cesaro = false;
  unsigned upto = 0;
  auto* sum = app.add_subcommand("sum", "Euler sum of a coefficient list via [L/M] at t = 1");
  sum->add_option("--coeffs", coeffs, "c0,c1,...")->required();
  sum->add_option("-L", L, "Numerator degree");
  sum->add_option("-M", M, "Denominator degree");
  sum->add_option("--cesaro", upto, "Print the first N Cesaro means instead")->check(CLI::PositiveNumber);

  std::string num, den;
  unsigned n = 0;
  bool radius = false;
  auto* expand = app.add_subcommand("expand", "Maclaurin coefficients c0..cN of num/den");
  expand->add_option("--num", num, "Numerator coefficients, ascending")->required();
  expand->add_option("--den", den, "Denominator coefficients, ascending")->required();
  expand->add_option("-N", n, "Highest power")->required();
  expand->add_flag("--radius", radius, "Also print the convergence radius (approximate)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (solve->parsed()) {
    if (json_opt->count() == 0 && expr_opt->count() == 0) {
      std::cerr << "eulerode: solve needs --json FILE or --expr with --operator\n";
      return 2;
    }
    return run_solve(sa, method_opt, trunc_opt, report_opt);
  }

  if (pade->parsed()) {
    Owned text;
    const eo_status s = eo_pade(coeffs.c_str(), L, M, oracle ? 1 : 0, &text.p, nullptr);
    if (s != EO_OK) return fail(s, eo_last_error());
    std::cout << text.p << "\n";
    return 0;
  }

  if (sum->parsed()) {
    Owned out;
    if (sum->get_option("--cesaro")->count()) {
      const eo_status s = eo_cesaro_means(coeffs.c_str(), upto, &out.p);
      if (s != EO_OK) return fail(s, eo_last_error());
    } else {
      if (!sum->get_option("-L")->count() || !sum->get_option("-M")->count()) {
        std::cerr << "eulerode: sum needs -L and -M (or --cesaro N)\n";
        return 2;
      }
      const eo_status s = eo_euler_sum(coeffs.c_str(), L, M, &out.p);
      if (s != EO_OK) return fail(s, eo_last_error());
    }
    std::cout << out.p << "\n";
    return 0;
  }

  if (expand->parsed()) {
    Owned out;
    eo_status s = eo_expand(num.c_str(), den.c_str(), n, &out.p);
    if (s != EO_OK) return fail(s, eo_last_error());
    std::cout << out.p << "\n";
    if (radius) {
      double r = 0;
      int unbounded = 0;
      s = eo_convergence_radius(den.c_str(), 1e-12, &r, &unbounded);
      if (s != EO_OK) return fail(s, eo_last_error());
      if (unbounded)
        std::cout << "radius: unbounded\n";
      else
        std::printf("radius (approx): %.12g\n", r);
      if (*eo_last_error()) std::cerr << "eulerode: warning: " << eo_last_error() << "\n";
    }
    return 0;
  }
  return 2;
}
