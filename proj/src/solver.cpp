#include "eulerode/solver.hpp"

#include <algorithm>

#include "eulerode/series.hpp"

namespace eulerode {

std::string_view solve_method_name(SolveMethod m) noexcept {
  switch (m) {
    case SolveMethod::Direct: return "direct";
    case SolveMethod::Divergent: return "divergent";
    case SolveMethod::ReducedDirect: return "reduced+direct";
    case SolveMethod::ReducedDivergent: return "reduced+divergent";
  }
  return "direct";
}

namespace {

enum class Pipeline { Direct, Divergent };

void require_rhs(const ODEProblem& p) {
  if (p.rhs.empty()) throw Error(ErrorCode::InvalidArgument, "right-hand side is empty");
}

std::vector<BasisTerm> terms_of(const std::vector<Term>& rhs) {
  std::vector<BasisTerm> out;
  out.reserve(rhs.size());
  for (const auto& t : rhs) out.push_back(t.term);
  return out;
}

/// Everything a single (alpha, beta) group contributes to the combined answer.
struct GroupResult {
  FunctionSpaceBasis basis;
  Vector unpruned;
  Vector coords;
  std::vector<KernelRemoval> removed;
  std::vector<std::vector<Rational>> series;
  std::vector<RationalFunction> fractions;
  std::vector<bool> approximant;
  Vector values;
  GroupReport report;
};

/// Shared setup: resonance analysis, closure basis, operator matrices.
struct GroupSetup {
  ODEProblem reduced;
  ResonanceInfo info;
  FunctionSpaceBasis basis;
  Matrix d;
  Matrix phi_d;
  Vector g;
  Vector g_reduced;
};

GroupSetup setup_group(const ODEProblem& p) {
  auto [reduced, info] = reduce_resonant(p);
  FunctionSpaceBasis basis = build_basis(terms_of(p.rhs), info.k);
  Matrix d = matrix_operator(basis).entries;
  Matrix phi_d = apply_operator_poly(p.phi, d);
  Vector g = coordinates(p.rhs, basis);
  Vector g_reduced = coordinates(reduced.rhs, basis);
  return {std::move(reduced), std::move(info), std::move(basis), std::move(d),
          std::move(phi_d), std::move(g), std::move(g_reduced)};
}

void finish_group(GroupResult& r, const Matrix& phi_d) {
  const PrunedSolution pruned = prune_kernel({r.basis, r.unpruned}, phi_d);
  r.coords = pruned.solution.coords;
  r.removed = pruned.removed;
}

GroupResult direct_group(const ODEProblem& p) {
  GroupSetup s = setup_group(p);
  GroupResult r{s.basis, {}, {}, {}, {}, {}, {}, {}, {}};
  r.report.alpha = p.rhs.front().term.alpha;
  r.report.beta = p.rhs.front().term.beta;
  r.report.k = s.info.k;
  r.report.reduced_operator = s.info.derivative_poly.poly();
  r.report.size = s.basis.size();

  if (s.info.k == 0) {
    r.report.method = SolveMethod::Direct;
    auto y = solve_unique(s.phi_d, s.g);
    if (!y) throw Error(ErrorCode::Internal, "phi(D) is singular although alpha + beta*i is not a root");
    r.unpruned = std::move(*y);
  } else {
    r.report.method = SolveMethod::ReducedDirect;
    const Matrix psi_d = apply_operator_poly(s.info.derivative_poly, s.d);
    auto y = solve_unique(psi_d, s.g_reduced);
    if (!y) throw Error(ErrorCode::ReductionFailed, "reduced operator matrix is singular");
    if (s.phi_d * *y != s.g) {
      // The reduction is exact for x^0 right-hand sides only. For higher
      // powers solve the consistent singular system on the same basis.
      r.report.notes.push_back(
          "reduced solution does not satisfy the original equation (rhs has x-powers > 0); "
          "solved phi(D) y = g on the enlarged basis instead");
      y = solve_consistent(s.phi_d, s.g);
      if (!y) throw Error(ErrorCode::ReductionFailed, "phi(D) y = g has no solution in the enlarged basis");
    }
    r.unpruned = std::move(*y);
  }
  finish_group(r, s.phi_d);
  return r;
}

GroupResult divergent_group(const ODEProblem& p, std::optional<std::size_t> truncation,
                            SolveReport& partial) {
  GroupSetup s = setup_group(p);
  GroupResult r{s.basis, {}, {}, {}, {}, {}, {}, {}, {}};
  r.report.alpha = p.rhs.front().term.alpha;
  r.report.beta = p.rhs.front().term.beta;
  r.report.k = s.info.k;
  r.report.reduced_operator = s.info.derivative_poly.poly();
  r.report.size = s.basis.size();
  r.report.method = s.info.k == 0 ? SolveMethod::Divergent : SolveMethod::ReducedDivergent;

  const OperatorPolynomial& psi = s.info.derivative_poly;
  if (psi.poly()[0].is_zero()) {
    partial.groups.push_back(r.report);
    throw Error(ErrorCode::InverseExpansionUndefined,
                "operator " + psi.to_string() +
                    " has zero constant term, so 1/phi(t) has no Maclaurin expansion "
                    "(resonance reduction only removes this when the rhs has alpha + beta*i = 0)");
  }

  const std::size_t n = psi.order();
  const std::size_t m = s.basis.size();
  std::size_t L = n * (m - 1);
  std::size_t M = n * m;
  const std::size_t N = truncation.value_or(L + M);
  if (N >= L + M) {
    L += N - (L + M);
  } else {
    L = std::min(L, N / 2);
    M = N - L;
    r.report.notes.push_back("truncation below L+M; Pade bounds reduced to [" + std::to_string(L) +
                             "/" + std::to_string(M) + "]");
  }
  r.report.L = L;
  r.report.M = M;
  r.report.truncation_degree = N;

  r.series = component_series(psi, s.d, s.g_reduced, N);
  for (const auto& row : r.series) {
    PadeResult pr = pade_approximant(PadeRequest(row, L, M));
    r.fractions.push_back(pr.fraction);
    r.approximant.push_back(!pr.matches_series);
  }

  try {
    for (const auto& f : r.fractions) r.values.push_back(f.eval(Rational(1)));
  } catch (const Error&) {
    partial.groups.push_back(r.report);
    partial.component_series.insert(partial.component_series.end(), r.series.begin(), r.series.end());
    partial.component_fractions.insert(partial.component_fractions.end(), r.fractions.begin(),
                                       r.fractions.end());
    throw;
  }
  r.unpruned = r.values;

  if (s.phi_d * r.unpruned != s.g) {
    partial.groups.push_back(r.report);
    partial.component_series.insert(partial.component_series.end(), r.series.begin(), r.series.end());
    partial.component_fractions.insert(partial.component_fractions.end(), r.fractions.begin(),
                                       r.fractions.end());
    partial.values_at_one.insert(partial.values_at_one.end(), r.values.begin(), r.values.end());
    throw Error(ErrorCode::SummationInconsistent,
                "Euler sums do not satisfy phi(D) y = g; the Pade fractions are not the "
                "exact components (truncation too small or the operator matrix is singular)");
  }
  finish_group(r, s.phi_d);
  return r;
}

SolveMethod combine_methods(const std::vector<GroupReport>& groups, Pipeline pipeline) {
  const bool reduced =
      std::any_of(groups.begin(), groups.end(), [](const GroupReport& g) { return g.k > 0; });
  if (pipeline == Pipeline::Direct) return reduced ? SolveMethod::ReducedDirect : SolveMethod::Direct;
  return reduced ? SolveMethod::ReducedDivergent : SolveMethod::Divergent;
}

SolveOutcome solve_pipeline(const ODEProblem& p, Pipeline pipeline, std::optional<std::size_t> truncation) {
  SolveReport report;
  report.method = pipeline == Pipeline::Direct ? SolveMethod::Direct : SolveMethod::Divergent;
  try {
    require_rhs(p);
    std::vector<BasisTerm> terms;
    Vector unpruned;
    Vector coords;
    for (const ODEProblem& group : split_groups(p)) {
      GroupResult r = pipeline == Pipeline::Direct ? direct_group(group)
                                                   : divergent_group(group, truncation, report);
      const std::size_t offset = terms.size();
      r.report.offset = offset;
      terms.insert(terms.end(), r.basis.terms().begin(), r.basis.terms().end());
      unpruned.insert(unpruned.end(), r.unpruned.begin(), r.unpruned.end());
      coords.insert(coords.end(), r.coords.begin(), r.coords.end());
      for (const auto& k : r.removed) report.kernel_pruned.push_back({k.index + offset, k.value});
      report.component_series.insert(report.component_series.end(), r.series.begin(), r.series.end());
      report.component_fractions.insert(report.component_fractions.end(), r.fractions.begin(),
                                        r.fractions.end());
      report.approximant.insert(report.approximant.end(), r.approximant.begin(), r.approximant.end());
      report.values_at_one.insert(report.values_at_one.end(), r.values.begin(), r.values.end());
      report.k = std::max(report.k, r.report.k);
      report.L = std::max(report.L, r.report.L);
      report.M = std::max(report.M, r.report.M);
      report.truncation_degree = std::max(report.truncation_degree, r.report.truncation_degree);
      report.groups.push_back(std::move(r.report));
    }
    report.method = combine_methods(report.groups, pipeline);
    report.basis = FunctionSpaceBasis(std::move(terms));
    report.unpruned = std::move(unpruned);

    ParticularSolution y{report.basis, coords};
    if (!verify_solution(p, y).is_zero())
      throw Error(pipeline == Pipeline::Direct ? ErrorCode::Internal : ErrorCode::SummationInconsistent,
                  "combined solution does not satisfy the equation");
    report.verified = true;
    return {std::move(y), std::move(report)};
  } catch (const SolveError&) {
    throw;
  } catch (const Error& e) {
    report.error_code = e.code();
    report.error_message = e.what();
    throw SolveError(e.code(), e.what(), std::move(report));
  }
}

}  // namespace

std::vector<ODEProblem> split_groups(const ODEProblem& p) {
  std::vector<ODEProblem> groups;
  for (const auto& t : p.rhs) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const ODEProblem& g) {
      return g.rhs.front().term.alpha == t.term.alpha && g.rhs.front().term.beta == t.term.beta;
    });
    if (it == groups.end())
      groups.push_back({p.phi, {t}});
    else
      it->rhs.push_back(t);
  }
  return groups;
}

std::pair<ODEProblem, ResonanceInfo> reduce_resonant(const ODEProblem& p) {
  require_rhs(p);
  const Rational& alpha = p.rhs.front().term.alpha;
  const Rational& beta = p.rhs.front().term.beta;
  for (const auto& t : p.rhs)
    if (t.term.alpha != alpha || t.term.beta != beta)
      throw Error(ErrorCode::InvalidArgument,
                  "reduce_resonant needs a single (alpha, beta) group; use split_groups first");

  ResonanceInfo info = resonance_multiplicity(p.phi, alpha, beta);
  ODEProblem reduced{info.derivative_poly, p.rhs};
  for (auto& t : reduced.rhs) t.term.power += info.k;
  return {std::move(reduced), std::move(info)};
}

PrunedSolution prune_kernel(const ParticularSolution& y, const Matrix& phi_d) {
  if (phi_d.rows() != y.coords.size() || phi_d.cols() != y.coords.size())
    throw Error(ErrorCode::InvalidArgument, "operator matrix does not match the solution basis");
  PrunedSolution out{y, {}};
  const NullSpace ns = null_space(phi_d);
  for (std::size_t i = 0; i < ns.vectors.size(); ++i) {
    const std::size_t f = ns.free_columns[i];
    const Rational c = out.solution.coords[f];
    if (c.is_zero()) continue;
    out.solution.coords = out.solution.coords - c * ns.vectors[i];
    out.removed.push_back({f, c});
  }
  return out;
}

Residual verify_solution(const ODEProblem& p, const ParticularSolution& y) {
  if (y.coords.size() != y.basis.size())
    throw Error(ErrorCode::InvalidArgument, "solution coordinates do not match its basis");
  std::vector<BasisTerm> terms = y.basis.terms();
  const FunctionSpaceBasis rhs_closure = build_basis(terms_of(p.rhs), 0);
  for (const auto& t : rhs_closure.terms())
    if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(t);
  FunctionSpaceBasis basis(std::move(terms));

  Vector coords(basis.size());
  std::copy(y.coords.begin(), y.coords.end(), coords.begin());
  const Matrix phi_d = apply_operator_poly(p.phi, matrix_operator(basis).entries);
  Vector residual = phi_d * coords - coordinates(p.rhs, basis);
  return {std::move(basis), std::move(residual)};
}

std::vector<std::vector<Rational>> component_series(const OperatorPolynomial& psi, const Matrix& d,
                                                    const Vector& g, std::size_t n) {
  const RationalFunction inverse = ratfun_normalize(Poly::constant(1), psi.poly());
  const SeriesTruncation c = maclaurin_coeffs(inverse, n);
  std::vector<std::vector<Rational>> rows(g.size(), std::vector<Rational>(n + 1));
  Vector x = g;
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < g.size(); ++i) rows[i][j] = c.coefficients[j] * x[i];
    if (j < n) x = d * x;
  }
  return rows;
}

SolveOutcome solve_direct(const ODEProblem& p) { return solve_pipeline(p, Pipeline::Direct, std::nullopt); }

SolveOutcome solve_divergent(const ODEProblem& p, std::optional<std::size_t> truncation) {
  return solve_pipeline(p, Pipeline::Divergent, truncation);
}

SolveOutcome solve_auto(const ODEProblem& p, std::optional<std::size_t> truncation) {
  try {
    return solve_direct(p);
  } catch (const SolveError& direct_failure) {
    try {
      return solve_divergent(p, truncation);
    } catch (const SolveError&) {
      throw direct_failure;
    }
  }
}

}  // namespace eulerode
