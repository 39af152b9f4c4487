#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eulerode/numeric.hpp"
#include "eulerode/poly.hpp"

namespace eulerode {

/// Finite prefix c_0..c_N of a Maclaurin expansion.
struct SeriesTruncation {
  std::vector<Rational> coefficients;
  std::optional<double> nominal_radius;

  std::size_t size() const noexcept { return coefficients.size(); }
  /// Highest power present (N).
  std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// c_0..c_N of num/den via the linear recurrence
///   c_n = -(q_M c_{n-M} + ... + q_1 c_{n-1}) + p_n,
/// with c_n = 0 for n < 0 and p_n = 0 for n > L.
SeriesTruncation maclaurin_coeffs(const RationalFunction& r, std::size_t n);

/// Smallest modulus over the complex roots of the denominator of r.
/// Diagnostic only; `unbounded` for a constant denominator.
NumericEstimate convergence_radius(const RationalFunction& r, double tol = 1e-9);
NumericEstimate convergence_radius(const Poly& denominator, double tol = 1e-9);

/// Arithmetic means of the partial sums: entry n is (s_0 + ... + s_n)/(n+1)
/// for n = 0..upto-1.
std::vector<Rational> cesaro_means(const std::vector<Rational>& coeffs, std::size_t upto);

/// Euler sum: rebuild R_[L/M] from the series by Pade and return R(1).
/// Throws EulerSumUndefined when the denominator vanishes at t = 1.
Rational euler_sum(const SeriesTruncation& series, std::size_t L, std::size_t M);

}  // namespace eulerode
