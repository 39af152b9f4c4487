#include "eulerode/poly.hpp"

#include <algorithm>

#include "eulerode/error.hpp"

namespace eulerode {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GaussianRational Poly::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + GaussianRational(*it);
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const Rational inv = leading().inverse();
  return inv * *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational lead_inv = divisor.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    const bool unit = a == 1;
    if (i == 0) {
      out += a.to_string();
      continue;
    }
    if (!unit) out += (a.is_integer() ? a.to_string() : "(" + a.to_string() + ")") + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly poly_derivative(const Poly& p) { return p.derivative(); }

GaussianRational poly_eval_complex(const Poly& p, const GaussianRational& z) { return p.eval(z); }

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero())
    throw Error(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero())
    throw Error(ErrorCode::EulerSumUndefined,
                "denominator " + den_.to_string() + " vanishes at t = " + x.to_string());
  return num_.eval(x) / d;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction ratfun_normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (num.is_zero()) return RationalFunction();
  const Poly g = poly_gcd(num, den);
  Poly n = num;
  Poly d = den;
  if (g.degree() > 0) {
    n = num.divmod(g).first;
    d = den.divmod(g).first;
  }
  const Rational d0 = d[0];
  if (d0.is_zero())
    throw Error(ErrorCode::NotDefinedAtZero,
                "rational function with denominator " + d.to_string() + " is not defined at zero");
  const Rational s = d0.inverse();
  return RationalFunction(s * n, s * d);
}

}  // namespace eulerode
