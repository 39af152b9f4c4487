#include "eulerode/rational.hpp"

#include <cctype>

#include "eulerode/error.hpp"

namespace eulerode {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::NotDefinedAtZero: return "not-defined-at-zero";
    case ErrorCode::BasisMismatch: return "basis-mismatch";
    case ErrorCode::EulerSumUndefined: return "euler-sum-undefined";
    case ErrorCode::InverseExpansionUndefined: return "inverse-expansion-undefined";
    case ErrorCode::PadeDegenerate: return "pade-degenerate";
    case ErrorCode::OracleDegenerate: return "oracle-degenerate";
    case ErrorCode::SummationInconsistent: return "summation-inconsistent";
    case ErrorCode::ReductionFailed: return "reduction-failed";
    case ErrorCode::Internal: return "internal-error";
  }
  return "unknown";
}

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto n = s.substr(0, slash);
    auto d = s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
      throw Error(ErrorCode::Parse, "not a rational literal: '" + std::string(text) + "'");
    num.set_str(std::string(n), 10);
    den.set_str(std::string(d), 10);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorCode::Parse, "not a rational literal: '" + std::string(text) + "'");
    num.set_str(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
  } else {
    if (!all_digits(s))
      throw Error(ErrorCode::Parse, "not a rational literal: '" + std::string(text) + "'");
    num.set_str(std::string(s), 10);
  }
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  const Rational n = b.norm();
  if (n.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  const GaussianRational p = a * b.conjugate();
  return {p.re / n, p.im / n};
}

std::string GaussianRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string s = re.is_zero() ? "" : re.to_string();
  if (im.sign() < 0)
    s += "-";
  else if (!s.empty())
    s += "+";
  const Rational a = im.abs();
  if (a != 1) s += a.to_string() + "*";
  return s + "i";
}

}  // namespace eulerode
