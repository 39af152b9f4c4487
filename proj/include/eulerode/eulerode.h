/*
 * eulerode C API.
 *
 * Particular solutions of constant-coefficient linear ODEs with typical
 * right-hand sides, in exact rational arithmetic, by matrix inversion or by
 * Euler summation of the divergent operator series (Pade at t = 1).
 *
 * Every function returns an eo_status. Objects are opaque and owned by the
 * caller once created; release them with the matching *_free function.
 * Strings returned through `char**` out-parameters are heap allocated and
 * must be released with eo_string_free. Strings returned as `const char*`
 * from a result object live as long as that object.
 *
 * Rationals are exchanged as "p/q" (or "p") strings. Coefficient lists are
 * comma separated ("1,-1,-1") or JSON arrays, ascending powers.
 */
#ifndef EULERODE_H
#define EULERODE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(EO_BUILDING_LIBRARY)
#define EO_API __attribute__((visibility("default")))
#else
#define EO_API
#endif

typedef enum eo_status {
  EO_OK = 0,
  EO_ERR_PARSE = 1,
  EO_ERR_INVALID_ARGUMENT = 2,
  EO_ERR_NOT_DEFINED_AT_ZERO = 3,
  EO_ERR_BASIS_MISMATCH = 4,
  EO_ERR_EULER_SUM_UNDEFINED = 5,
  EO_ERR_INVERSE_EXPANSION_UNDEFINED = 6,
  EO_ERR_PADE_DEGENERATE = 7,
  EO_ERR_ORACLE_DEGENERATE = 8,
  EO_ERR_SUMMATION_INCONSISTENT = 9,
  EO_ERR_REDUCTION_FAILED = 10,
  EO_ERR_INTERNAL = 11
} eo_status;

typedef enum eo_method {
  EO_METHOD_AUTO = 0,
  EO_METHOD_DIRECT = 1,
  EO_METHOD_DIVERGENT = 2
} eo_method;

typedef enum eo_verbosity {
  EO_REPORT_SUMMARY = 0,
  EO_REPORT_FULL = 1
} eo_verbosity;

typedef struct eo_problem eo_problem;
typedef struct eo_result eo_result;

/* Stable short name of a status, e.g. "euler-sum-undefined". */
EO_API const char* eo_status_name(eo_status status);

/* Message of the most recent failure on the calling thread ("" if none). */
EO_API const char* eo_last_error(void);

EO_API void eo_string_free(char* s);

/* Problems ------------------------------------------------------------- */

EO_API eo_status eo_problem_from_json(const char* json_text, eo_problem** out);
/* operator: "a0,a1,...,an"; rhs: expression such as "exp(x)*sin(x) - 2*exp(x)*cos(x)". */
EO_API eo_status eo_problem_from_expr(const char* operator_coeffs, const char* rhs_expr, eo_problem** out);
EO_API void eo_problem_free(eo_problem* problem);

/* Options carried by a JSON document (defaults for the expression route). */
EO_API eo_method eo_problem_method(const eo_problem* problem);
/* -1 when the document does not set a truncation. */
EO_API long eo_problem_truncation(const eo_problem* problem);
EO_API eo_verbosity eo_problem_verbosity(const eo_problem* problem);

/* Solving -------------------------------------------------------------- */

/*
 * Solves the problem. `truncation` < 0 selects the default series degree.
 * A result object is produced whenever `out` is non-null, also on failure,
 * so the report of a failed solve can be inspected; the return value equals
 * eo_result_status(*out).
 */
EO_API eo_status eo_solve(const eo_problem* problem, eo_method method, long truncation, eo_result** out);
EO_API void eo_result_free(eo_result* result);

EO_API eo_status eo_result_status(const eo_result* result);
/* Error message of a failed solve, "" on success. */
EO_API const char* eo_result_message(const eo_result* result);
/* Rendered solution, e.g. "(2/3)*exp(x)*sin(x) + (1/3)*exp(x)*cos(x)"; "" on failure. */
EO_API const char* eo_result_solution(const eo_result* result);
/* Same with floating-point coefficients; approximate. */
EO_API const char* eo_result_solution_decimal(const eo_result* result);
/* JSON report. */
EO_API const char* eo_result_report(const eo_result* result, eo_verbosity verbosity, int with_decimal);

/* Scalar tools --------------------------------------------------------- */

/* Pade fraction of a coefficient list; `use_oracle` selects the determinant formula.
 * out_text: "(4*t^2 + t + 1)/(...)"; out_json: {"num": [...], "den": [...], ...}. Either may be NULL. */
EO_API eo_status eo_pade(const char* coeffs, unsigned L, unsigned M, int use_oracle, char** out_text,
                         char** out_json);
/* Euler sum of a coefficient list through its [L/M] Pade fraction, as "p/q". */
EO_API eo_status eo_euler_sum(const char* coeffs, unsigned L, unsigned M, char** out);
/* JSON array of the first `upto` Cesaro means. */
EO_API eo_status eo_cesaro_means(const char* coeffs, unsigned upto, char** out_json);
/* JSON array of c_0..c_N for num/den. */
EO_API eo_status eo_expand(const char* num_coeffs, const char* den_coeffs, unsigned n, char** out_json);
/* Smallest root modulus of the denominator; *unbounded set for a constant denominator. */
EO_API eo_status eo_convergence_radius(const char* den_coeffs, double tol, double* out, int* unbounded);

#ifdef __cplusplus
}
#endif

#endif /* EULERODE_H */
