#include "eulerode/diffop.hpp"

#include <algorithm>
#include <cmath>

#include "eulerode/error.hpp"

namespace eulerode {

std::string_view trig_kind_name(TrigKind kind) noexcept {
  switch (kind) {
    case TrigKind::Sin: return "sin";
    case TrigKind::Cos: return "cos";
    case TrigKind::Exp: return "exp";
  }
  return "exp";
}

std::optional<Term> canonical_term(const Rational& coef, unsigned power, const Rational& alpha,
                                   const Rational& beta, TrigKind kind) {
  if (coef.is_zero()) return std::nullopt;
  Rational c = coef;
  Rational b = beta;
  if (kind == TrigKind::Exp) {
    if (!b.is_zero()) throw Error(ErrorCode::InvalidArgument, "exp term with nonzero beta");
    return Term{c, {power, alpha, Rational(), TrigKind::Exp}};
  }
  if (b.is_zero()) {
    if (kind == TrigKind::Sin) return std::nullopt;
    return Term{c, {power, alpha, Rational(), TrigKind::Exp}};
  }
  if (b.sign() < 0) {
    b = -b;
    if (kind == TrigKind::Sin) c = -c;
  }
  return Term{c, {power, alpha, b, kind}};
}

FunctionSpaceBasis::FunctionSpaceBasis(std::vector<BasisTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const BasisTerm& t = terms_[i];
    if ((t.kind == TrigKind::Exp) != t.beta.is_zero() || t.beta.sign() < 0)
      throw Error(ErrorCode::InvalidArgument, "basis term is not in canonical form");
    for (std::size_t j = 0; j < i; ++j)
      if (terms_[j] == t) throw Error(ErrorCode::InvalidArgument, "duplicate basis term");
  }
  for (const auto& t : terms_)
    for (const auto& d : differentiate(t))
      if (!index_of(d.term))
        throw Error(ErrorCode::InvalidArgument, "basis is not closed under differentiation");
}

std::optional<std::size_t> FunctionSpaceBasis::index_of(const BasisTerm& t) const {
  auto it = std::find(terms_.begin(), terms_.end(), t);
  if (it == terms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - terms_.begin());
}

OperatorPolynomial::OperatorPolynomial(Poly p) : poly_(std::move(p)) {
  if (poly_.is_zero()) throw Error(ErrorCode::InvalidArgument, "operator polynomial is zero");
}

OperatorPolynomial OperatorPolynomial::derivative() const {
  if (poly_.degree() == 0) throw Error(ErrorCode::InvalidArgument, "derivative of a constant operator");
  return OperatorPolynomial(poly_.derivative());
}

ResonanceInfo resonance_multiplicity(const OperatorPolynomial& phi, const Rational& alpha,
                                     const Rational& beta) {
  const GaussianRational z(alpha, beta);
  ResonanceInfo info{0, phi, z};
  // phi^(n) is a nonzero constant, so this stops at k <= n.
  while (info.derivative_poly.poly().eval(z).is_zero()) {
    info.derivative_poly = info.derivative_poly.derivative();
    ++info.k;
  }
  return info;
}

FunctionSpaceBasis build_basis(const std::vector<BasisTerm>& rhs_terms, unsigned k) {
  struct Group {
    Rational alpha;
    Rational beta;
    unsigned top = 0;
  };
  std::vector<Group> groups;
  for (const auto& t : rhs_terms) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.alpha == t.alpha && g.beta == t.beta; });
    if (it == groups.end())
      groups.push_back({t.alpha, t.beta, t.power});
    else
      it->top = std::max(it->top, t.power);
  }

  std::vector<BasisTerm> terms;
  for (const auto& g : groups) {
    for (unsigned j = g.top + k + 1; j-- > 0;) {
      if (g.beta.is_zero()) {
        terms.push_back({j, g.alpha, Rational(), TrigKind::Exp});
      } else {
        terms.push_back({j, g.alpha, g.beta, TrigKind::Sin});
        terms.push_back({j, g.alpha, g.beta, TrigKind::Cos});
      }
    }
  }
  return FunctionSpaceBasis(std::move(terms));
}

std::vector<Term> differentiate(const BasisTerm& t) {
  std::vector<Term> out;
  if (t.power > 0)
    out.push_back({Rational(static_cast<long>(t.power)), {t.power - 1, t.alpha, t.beta, t.kind}});
  if (!t.alpha.is_zero()) out.push_back({t.alpha, t});
  if (t.kind == TrigKind::Sin)
    out.push_back({t.beta, {t.power, t.alpha, t.beta, TrigKind::Cos}});
  else if (t.kind == TrigKind::Cos)
    out.push_back({-t.beta, {t.power, t.alpha, t.beta, TrigKind::Sin}});
  return out;
}

MatrixOperator matrix_operator(const FunctionSpaceBasis& basis) {
  const std::size_t m = basis.size();
  Matrix d(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& term : differentiate(basis.terms()[i])) {
      const auto row = basis.index_of(term.term);
      if (!row) throw Error(ErrorCode::BasisMismatch, "basis is not closed under differentiation");
      d(*row, i) += term.coef;
    }
  return {std::move(d), basis};
}

Matrix apply_operator_poly(const OperatorPolynomial& phi, const Matrix& d) {
  if (!d.is_square()) throw Error(ErrorCode::InvalidArgument, "operator matrix must be square");
  const auto& a = phi.poly().coeffs();
  const Matrix id = Matrix::identity(d.rows());
  Matrix acc = a.back() * id;
  for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * d + a[i] * id;
  return acc;
}

Vector coordinates(const std::vector<Term>& rhs, const FunctionSpaceBasis& basis) {
  Vector g(basis.size());
  for (const auto& t : rhs) {
    const auto idx = basis.index_of(t.term);
    if (!idx) throw Error(ErrorCode::BasisMismatch, "right-hand side term is not in the basis");
    g[*idx] += t.coef;
  }
  return g;
}

NumericEstimate estimate_spectral_radius(const Matrix& d, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  NumericEstimate est;
  if (d.rows() == 0) return est;
  bool converged = true;
  const auto roots = distinct_roots(characteristic_polynomial(d), tol, converged);
  for (const auto& z : roots) est.value = std::max(est.value, std::abs(z));
  est.reliable = converged;
  return est;
}

NumericEstimate estimate_spectral_radius(const MatrixOperator& d, double tol) {
  return estimate_spectral_radius(d.entries, tol);
}

}  // namespace eulerode
