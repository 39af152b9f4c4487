#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerode/diffop.hpp"
#include "eulerode/error.hpp"
#include "eulerode/matrix.hpp"
#include "eulerode/pade.hpp"

namespace eulerode {

/// phi(D) y = sum of rhs terms.
struct ODEProblem {
  OperatorPolynomial phi;
  std::vector<Term> rhs;
};

struct ParticularSolution {
  FunctionSpaceBasis basis;
  Vector coords;
};

enum class SolveMethod { Direct, Divergent, ReducedDirect, ReducedDivergent };

std::string_view solve_method_name(SolveMethod m) noexcept;

struct KernelRemoval {
  std::size_t index;  ///< coordinate in the solution basis
  Rational value;     ///< amount of the kernel vector that was subtracted
};

/// Per (alpha, beta) group. Basis coordinates offset..offset+size-1 of the
/// combined solution belong to this group.
struct GroupReport {
  Rational alpha;
  Rational beta;
  unsigned k = 0;
  Poly reduced_operator;
  SolveMethod method = SolveMethod::Direct;
  std::size_t offset = 0;
  std::size_t size = 0;
  std::size_t L = 0;
  std::size_t M = 0;
  std::size_t truncation_degree = 0;
  std::vector<std::string> notes;
};

/// Produced on every solve, including failed ones (attached to SolveError),
/// so that degenerate fractions stay inspectable. Vectors indexed by basis
/// coordinate span the whole combined basis; the divergent-only ones are
/// empty on the direct path.
struct SolveReport {
  SolveMethod method = SolveMethod::Direct;
  unsigned k = 0;
  std::size_t L = 0;
  std::size_t M = 0;
  std::size_t truncation_degree = 0;
  FunctionSpaceBasis basis;
  Vector unpruned;
  std::vector<std::vector<Rational>> component_series;
  std::vector<RationalFunction> component_fractions;
  std::vector<bool> approximant;
  Vector values_at_one;
  std::vector<KernelRemoval> kernel_pruned;
  bool verified = false;
  std::vector<GroupReport> groups;
  std::optional<ErrorCode> error_code;
  std::string error_message;
};

struct SolveOutcome {
  ParticularSolution solution;
  SolveReport report;
};

class SolveError : public Error {
 public:
  SolveError(ErrorCode code, const std::string& message, SolveReport report)
      : Error(code, message), report_(std::move(report)) {}
  const SolveReport& report() const noexcept { return report_; }

 private:
  SolveReport report_;
};

/// Matrix inversion on the closure basis; resonant groups go through
/// reduce_resonant first and are then kernel-pruned.
SolveOutcome solve_direct(const ODEProblem& p);

/// Euler summation of sum_k c_k t^k D^k g through per-coordinate Pade
/// fractions evaluated at t = 1. `truncation` overrides the default series
/// degree L + M with L = n(m-1), M = nm.
SolveOutcome solve_divergent(const ODEProblem& p, std::optional<std::size_t> truncation = {});

/// solve_direct, falling back to solve_divergent if it fails.
SolveOutcome solve_auto(const ODEProblem& p, std::optional<std::size_t> truncation = {});

/// Splits the right-hand side by (alpha, beta), preserving first-appearance order.
std::vector<ODEProblem> split_groups(const ODEProblem& p);

/// phi^(k)(D) y = x^k rhs, with k the resonance multiplicity of the (single)
/// group's alpha + beta*i. k = 0 leaves the problem unchanged.
std::pair<ODEProblem, ResonanceInfo> reduce_resonant(const ODEProblem& p);

struct PrunedSolution {
  ParticularSolution solution;
  std::vector<KernelRemoval> removed;
};

/// Subtracts, for each reduced-echelon kernel vector of phi_d, the multiple
/// that zeroes its free coordinate.
PrunedSolution prune_kernel(const ParticularSolution& y, const Matrix& phi_d);

struct Residual {
  FunctionSpaceBasis basis;  ///< y's basis, extended by the closure of the rhs if needed
  Vector values;
  bool is_zero() const { return eulerode::is_zero(values); }
};

/// phi(D) y - rhs, exactly.
Residual verify_solution(const ODEProblem& p, const ParticularSolution& y);

/// Row i: coefficients of t^0..t^n of coordinate i of sum_j c_j t^j D^j g,
/// where c_j are the Maclaurin coefficients of 1/psi(t).
std::vector<std::vector<Rational>> component_series(const OperatorPolynomial& psi, const Matrix& d,
                                                    const Vector& g, std::size_t n);

}  // namespace eulerode
