#include "eulerode/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eulerode/error.hpp"
#include "eulerode/pade.hpp"

namespace eulerode {

SeriesTruncation maclaurin_coeffs(const RationalFunction& r, std::size_t n) {
  const Poly& p = r.numerator();
  const Poly& q = r.denominator();
  const std::size_t m = static_cast<std::size_t>(std::max(q.degree(), 0));

  SeriesTruncation out;
  out.coefficients.resize(n + 1);
  auto& c = out.coefficients;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = p[k];
    for (std::size_t i = 1; i <= std::min(m, k); ++i) acc -= q[i] * c[k - i];
    c[k] = std::move(acc);
  }
  return out;
}

NumericEstimate convergence_radius(const Poly& denominator, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (denominator.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  NumericEstimate est;
  if (denominator.degree() < 1) {
    est.value = std::numeric_limits<double>::infinity();
    est.unbounded = true;
    return est;
  }
  bool converged = true;
  const auto roots = distinct_roots(denominator, tol, converged);
  double r = std::numeric_limits<double>::infinity();
  for (const auto& z : roots) r = std::min(r, std::abs(z));
  est.value = r;
  est.reliable = converged;
  return est;
}

NumericEstimate convergence_radius(const RationalFunction& r, double tol) {
  return convergence_radius(r.denominator(), tol);
}

std::vector<Rational> cesaro_means(const std::vector<Rational>& coeffs, std::size_t upto) {
  if (upto > coeffs.size())
    throw Error(ErrorCode::InvalidArgument, "cesaro_means: upto exceeds the number of coefficients");
  std::vector<Rational> means;
  means.reserve(upto);
  Rational partial;
  Rational partial_total;
  for (std::size_t n = 0; n < upto; ++n) {
    partial += coeffs[n];
    partial_total += partial;
    means.push_back(partial_total / Rational(static_cast<long>(n + 1)));
  }
  return means;
}

Rational euler_sum(const SeriesTruncation& series, std::size_t L, std::size_t M) {
  const RationalFunction r = pade_solve(PadeRequest(series.coefficients, L, M));
  return r.eval(Rational(1));
}

}  // namespace eulerode
