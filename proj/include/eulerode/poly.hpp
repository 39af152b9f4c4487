#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eulerode/rational.hpp"

namespace eulerode {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of
/// x^i; trailing zeros are always trimmed, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& c) { return Poly({c}); }
  /// c * x^k
  static Poly monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  Rational eval(const Rational& x) const;
  GaussianRational eval(const GaussianRational& z) const;
  double eval(double x) const;

  Poly derivative() const;
  Poly monic() const;
  /// Quotient and remainder; throws on division by the zero polynomial.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  /// Descending powers in `var`, e.g. "4*t^2 + t + 1"; "0" for zero.
  std::string to_string(std::string_view var = "t") const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly poly_derivative(const Poly& p);
GaussianRational poly_eval_complex(const Poly& p, const GaussianRational& z);
/// Monic gcd by the Euclidean algorithm. Throws InvalidArgument if both are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// num/den reduced to lowest terms and scaled so that den(0) == 1.
class RationalFunction {
 public:
  /// The constant function 0.
  RationalFunction() : den_({Rational(1)}) {}

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  /// Throws EulerSumUndefined if the denominator vanishes at x.
  Rational eval(const Rational& x) const;
  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  friend RationalFunction ratfun_normalize(const Poly& num, const Poly& den);
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Reduces by the gcd and rescales to den(0) = 1. Throws InvalidArgument for a
/// zero denominator and NotDefinedAtZero when the reduced denominator has a
/// root at the origin.
RationalFunction ratfun_normalize(const Poly& num, const Poly& den);

}  // namespace eulerode
