#include "eulerode/numeric.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "eulerode/error.hpp"

namespace eulerode {

namespace {

constexpr int kNewtonCap = 100;

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<std::complex<double>> distinct_roots(const Poly& p, double tol, bool& converged) {
  converged = true;
  if (p.degree() < 1) return {};

  Poly sf = p;
  const Poly g = poly_gcd(p, p.derivative());
  if (g.degree() > 0) sf = p.divmod(g).first;
  sf = sf.monic();

  const int n = sf.degree();
  std::vector<double> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = sf[static_cast<std::size_t>(i)].to_double();
  std::vector<double> dc(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) dc[static_cast<std::size_t>(i - 1)] = i * c[static_cast<std::size_t>(i)];

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) converged = false;
  const auto eig = solver.eigenvalues();

  std::vector<std::complex<double>> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = eig(i);
    bool ok = false;
    for (int it = 0; it < kNewtonCap; ++it) {
      const std::complex<double> d = horner(dc, z);
      if (std::abs(d) == 0.0) break;
      const std::complex<double> step = horner(c, z) / d;
      z -= step;
      if (std::abs(step) <= tol * std::max(std::abs(z), 1.0)) {
        ok = true;
        break;
      }
    }
    if (!ok && std::abs(horner(c, z)) > std::numeric_limits<double>::epsilon()) converged = false;
    roots.push_back(z);
  }
  return roots;
}

Poly characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // coeffs[k] multiplies lambda^k
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + coeffs[n - k + 1] * Matrix::identity(n);
    const Matrix am = a * m;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return Poly(std::move(coeffs));
}

}  // namespace eulerode
