#pragma once

#include <complex>
#include <vector>

#include "eulerode/matrix.hpp"
#include "eulerode/poly.hpp"

namespace eulerode {

/// Approximate quantities. Nothing in the exact solve path depends on them.
struct NumericEstimate {
  double value = 0.0;
  bool unbounded = false;  ///< no finite answer (e.g. constant denominator)
  bool reliable = true;    ///< false when root polishing hit its iteration cap
};

/// Approximate complex roots of p, one per distinct root. Works on the exact
/// squarefree part of p, seeds from companion-matrix eigenvalues and polishes
/// each root by Newton steps until the relative step is below tol.
/// `converged` is cleared if any root fails to meet tol.
std::vector<std::complex<double>> distinct_roots(const Poly& p, double tol, bool& converged);

/// Characteristic polynomial det(lambda I - a), exact (Faddeev-LeVerrier).
Poly characteristic_polynomial(const Matrix& a);

}  // namespace eulerode
