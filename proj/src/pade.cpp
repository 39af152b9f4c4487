#include "eulerode/pade.hpp"

#include <optional>
#include <string>

#include "eulerode/error.hpp"
#include "eulerode/matrix.hpp"
#include "eulerode/series.hpp"

namespace eulerode {

PadeRequest::PadeRequest(std::vector<Rational> series, std::size_t L, std::size_t M)
    : series_(std::move(series)), L_(L), M_(M) {
  if (series_.size() < L_ + M_ + 1)
    throw Error(ErrorCode::InvalidArgument,
                "Pade [" + std::to_string(L_) + "/" + std::to_string(M_) + "] needs " +
                    std::to_string(L_ + M_ + 1) + " coefficients, got " +
                    std::to_string(series_.size()));
}

Rational PadeRequest::coeff(long n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= series_.size()) return Rational();
  return series_[static_cast<std::size_t>(n)];
}

namespace {

std::optional<RationalFunction> solve_at(const PadeRequest& req, std::size_t L, std::size_t M) {
  const auto c = [&](std::size_t n, std::size_t back) {
    return req.coeff(static_cast<long>(n) - static_cast<long>(back));
  };

  // Rows n = L+1..L+M of  sum_{i=1..M} q_i c_{n-i} = -c_n.
  Matrix toeplitz(M, M);
  Vector rhs(M);
  for (std::size_t r = 0; r < M; ++r) {
    const std::size_t n = L + 1 + r;
    for (std::size_t i = 1; i <= M; ++i) toeplitz(r, i - 1) = c(n, i);
    rhs[r] = -c(n, 0);
  }
  const auto q_tail = solve_consistent(toeplitz, rhs);
  if (!q_tail) return std::nullopt;

  std::vector<Rational> q(M + 1);
  q[0] = 1;
  for (std::size_t i = 1; i <= M; ++i) q[i] = (*q_tail)[i - 1];

  std::vector<Rational> p(L + 1);
  for (std::size_t n = 0; n <= L; ++n)
    for (std::size_t i = 0; i <= std::min(n, M); ++i) p[n] += q[i] * c(n, i);

  return ratfun_normalize(Poly(std::move(p)), Poly(std::move(q)));
}

}  // namespace

PadeResult pade_approximant(const PadeRequest& req) {
  std::size_t L = req.L();
  std::size_t M = req.M();
  for (;;) {
    if (auto r = solve_at(req, L, M)) {
      PadeResult out{std::move(*r), L, M, true};
      const auto check = maclaurin_coeffs(out.fraction, req.series().size() - 1);
      out.matches_series = check.coefficients == req.series();
      return out;
    }
    if (L == 0 || M == 0) break;
    --L;
    --M;
  }
  throw Error(ErrorCode::PadeDegenerate,
              "no rational function fits the series at [" + std::to_string(req.L()) + "/" +
                  std::to_string(req.M()) + "] or any reduced bound");
}

RationalFunction pade_solve(const PadeRequest& req) { return pade_approximant(req).fraction; }

std::pair<Poly, Poly> pade_determinants(const PadeRequest& req) {
  const std::size_t L = req.L();
  const std::size_t M = req.M();
  if (L + M > 10)
    throw Error(ErrorCode::InvalidArgument, "determinant oracle is limited to L + M <= 10");
  const long l = static_cast<long>(L);
  const long m = static_cast<long>(M);

  // Upper M rows, shared by both determinants: row r holds c_{L-M+1+r+k}, k = 0..M.
  Matrix upper(M, M + 1);
  for (std::size_t r = 0; r < M; ++r)
    for (std::size_t k = 0; k <= M; ++k)
      upper(r, k) = req.coeff(l - m + 1 + static_cast<long>(r) + static_cast<long>(k));

  Poly num;
  Poly den;
  for (std::size_t col = 1; col <= M + 1; ++col) {
    Matrix minor(M, M);
    for (std::size_t r = 0; r < M; ++r)
      for (std::size_t k = 0, mk = 0; k <= M; ++k) {
        if (k == col - 1) continue;
        minor(r, mk++) = upper(r, k);
      }
    Rational cofactor = M == 0 ? Rational(1) : determinant(minor);
    if ((M + 1 + col) % 2 == 1) cofactor = -cofactor;
    if (cofactor.is_zero()) continue;

    // Numerator last row, column col: sum_{j=M-col+1..L} c_{j-M+col-1} t^j.
    std::vector<Rational> entry(L + 1);
    const long k = static_cast<long>(col);
    for (long j = std::max(m - k + 1, 0L); j <= l; ++j)
      entry[static_cast<std::size_t>(j)] = req.coeff(j - m + k - 1);
    num = num + cofactor * Poly(std::move(entry));
    den = den + Poly::monomial(cofactor, M + 1 - col);
  }
  return {num, den};
}

RationalFunction pade_determinant_oracle(const PadeRequest& req) {
  auto [num, den] = pade_determinants(req);
  if (den.is_zero()) throw Error(ErrorCode::OracleDegenerate, "denominator determinant vanishes");
  try {
    return ratfun_normalize(num, den);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotDefinedAtZero) throw Error(ErrorCode::OracleDegenerate, e.what());
    throw;
  }
}

}  // namespace eulerode
