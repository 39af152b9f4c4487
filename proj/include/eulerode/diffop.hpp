#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerode/matrix.hpp"
#include "eulerode/numeric.hpp"
#include "eulerode/poly.hpp"

namespace eulerode {

enum class TrigKind { Sin, Cos, Exp };

std::string_view trig_kind_name(TrigKind kind) noexcept;

/// x^power * e^(alpha x) * {sin(beta x) | cos(beta x) | 1}.
/// Canonical form: beta >= 0, and kind == Exp exactly when beta == 0.
struct BasisTerm {
  unsigned power = 0;
  Rational alpha;
  Rational beta;
  TrigKind kind = TrigKind::Exp;

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// A coefficient times a basis term; a right-hand side is a sum of these.
struct Term {
  Rational coef;
  BasisTerm term;
};

/// Brings an arbitrary x^j e^(ax) trig(bx) product into canonical form,
/// folding sin(-bx) = -sin(bx) and cos(0x) = 1 into the coefficient.
/// Returns nullopt when the product is identically zero (sin(0x), or coef 0).
std::optional<Term> canonical_term(const Rational& coef, unsigned power, const Rational& alpha,
                                   const Rational& beta, TrigKind kind);

/// Ordered basis, closed under d/dx, without duplicates.
class FunctionSpaceBasis {
 public:
  FunctionSpaceBasis() = default;
  /// Throws InvalidArgument on duplicates or a set that is not closed.
  explicit FunctionSpaceBasis(std::vector<BasisTerm> terms);

  const std::vector<BasisTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::optional<std::size_t> index_of(const BasisTerm& t) const;

  friend bool operator==(const FunctionSpaceBasis&, const FunctionSpaceBasis&) = default;

 private:
  std::vector<BasisTerm> terms_;
};

/// phi(D) = a_0 + a_1 D + ... + a_n D^n with a_n != 0. User-facing operators
/// have n >= 1; derivatives produced by resonance reduction may be constant.
class OperatorPolynomial {
 public:
  explicit OperatorPolynomial(Poly p);
  explicit OperatorPolynomial(std::vector<Rational> coeffs) : OperatorPolynomial(Poly(std::move(coeffs))) {}

  const Poly& poly() const noexcept { return poly_; }
  std::size_t order() const noexcept { return static_cast<std::size_t>(poly_.degree()); }
  OperatorPolynomial derivative() const;
  std::string to_string() const { return poly_.to_string("D"); }

  friend bool operator==(const OperatorPolynomial&, const OperatorPolynomial&) = default;

 private:
  Poly poly_;
};

struct ResonanceInfo {
  unsigned k = 0;
  OperatorPolynomial derivative_poly;  ///< phi^(k)
  GaussianRational root;               ///< alpha + beta i
};

/// Order of vanishing of phi at alpha + beta*i, by exact evaluation.
ResonanceInfo resonance_multiplicity(const OperatorPolynomial& phi, const Rational& alpha,
                                     const Rational& beta);

/// For each (alpha, beta) group in order of first appearance, with top
/// power d in the group: x^j e^(alpha x) sin/cos(beta x) for j = d+k down to 0,
/// sin before cos (just the exp term when beta = 0).
FunctionSpaceBasis build_basis(const std::vector<BasisTerm>& rhs_terms, unsigned k);

/// d/dx of a single basis term as a combination of canonical terms.
std::vector<Term> differentiate(const BasisTerm& t);

struct MatrixOperator {
  Matrix entries;
  FunctionSpaceBasis basis;
};

/// Column i holds the coordinates of the derivative of basis term i.
MatrixOperator matrix_operator(const FunctionSpaceBasis& basis);

/// a_n D^n + ... + a_1 D + a_0 I by Horner's rule.
Matrix apply_operator_poly(const OperatorPolynomial& phi, const Matrix& d);

/// Coordinates of sum(coef * term) in the basis; BasisMismatch if a term is missing.
Vector coordinates(const std::vector<Term>& rhs, const FunctionSpaceBasis& basis);

/// Numeric spectral radius via the roots of the exact characteristic polynomial.
NumericEstimate estimate_spectral_radius(const MatrixOperator& d, double tol = 1e-9);
NumericEstimate estimate_spectral_radius(const Matrix& d, double tol = 1e-9);

}  // namespace eulerode
