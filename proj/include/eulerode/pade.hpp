#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "eulerode/poly.hpp"

namespace eulerode {

/// A series prefix plus numerator/denominator degree bounds. Construction
/// enforces len(series) >= L + M + 1.
class PadeRequest {
 public:
  PadeRequest(std::vector<Rational> series, std::size_t L, std::size_t M);

  const std::vector<Rational>& series() const noexcept { return series_; }
  std::size_t L() const noexcept { return L_; }
  std::size_t M() const noexcept { return M_; }
  /// c_n, zero for n < 0.
  Rational coeff(long n) const;

 private:
  std::vector<Rational> series_;
  std::size_t L_;
  std::size_t M_;
};

struct PadeResult {
  RationalFunction fraction;
  std::size_t L_used = 0;  ///< bounds the fraction was solved at (after any ladder steps)
  std::size_t M_used = 0;
  /// False when the re-expanded fraction disagrees with some supplied
  /// coefficient: the result is then only an approximant, not the function
  /// that generated the series.
  bool matches_series = true;
};

/// Production path. Solves the M x M Toeplitz system for q_1..q_M, forms
/// p_0..p_L by convolution and normalizes. A singular but consistent system
/// still determines a unique fraction, so any solution is used. If the system
/// is inconsistent both bounds step down together, (L-1, M-1), ... until one
/// is solvable; PadeDegenerate if none is.
PadeResult pade_approximant(const PadeRequest& req);

/// pade_approximant(req).fraction
RationalFunction pade_solve(const PadeRequest& req);

/// Raw numerator and denominator determinants of the classical determinant
/// formula, expanded along their polynomial last rows. Only for L + M <= 10.
std::pair<Poly, Poly> pade_determinants(const PadeRequest& req);

/// Normalized quotient of pade_determinants. OracleDegenerate when the
/// denominator determinant is identically zero.
RationalFunction pade_determinant_oracle(const PadeRequest& req);

}  // namespace eulerode
