#include "eulerode/matrix.hpp"

#include <algorithm>

#include "eulerode/error.hpp"

namespace eulerode {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) s += (c ? ", " : "") + (*this)(r, c).to_string();
    s += "]";
  }
  return s + "]";
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x *= c;
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return v;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return v;
}

Vector operator*(const Rational& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

EchelonForm row_reduce(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const Rational inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivot_columns.size(); }

Rational determinant(Matrix a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return Rational();
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

NullSpace null_space(const Matrix& a) {
  const EchelonForm ef = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ef.pivot_columns) is_pivot[c] = true;

  NullSpace ns;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i)
      v[ef.pivot_columns[i]] = -ef.reduced(i, free);
    ns.vectors.push_back(std::move(v));
    ns.free_columns.push_back(free);
  }
  return ns;
}

std::vector<Vector> kernel_basis(const Matrix& a) { return null_space(a).vectors; }

namespace {

/// Row echelon form of an integer matrix by Bareiss elimination: every entry
/// stays an exact minor of the input, so sizes grow linearly, not
/// exponentially as with rational Gauss-Jordan.
struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivot_columns;
};

IntegerEchelon bareiss(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const mpz_class& piv = a[row][col];
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      const mpz_class f = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class v = piv * a[r][c] - f * a[row][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = std::move(v);
      }
      a[r][col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

std::optional<Vector> solve_consistent(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  const std::size_t n = a.cols();

  // Clear denominators row by row; the solution set is unchanged.
  std::vector<std::vector<mpz_class>> aug(a.rows(), std::vector<mpz_class>(n + 1));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = b[r].denominator();
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = a(r, c).numerator() * (l / a(r, c).denominator());
    aug[r][n] = b[r].numerator() * (l / b[r].denominator());
  }
  const IntegerEchelon ef = bareiss(std::move(aug), n + 1);
  if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == n) return std::nullopt;

  Vector x(n);
  for (std::size_t i = ef.pivot_columns.size(); i-- > 0;) {
    const std::size_t pc = ef.pivot_columns[i];
    mpq_class acc(ef.rows[i][n]);
    for (std::size_t j = i + 1; j < ef.pivot_columns.size(); ++j) {
      const std::size_t c = ef.pivot_columns[j];
      if (ef.rows[i][c] != 0) acc -= mpq_class(ef.rows[i][c]) * x[c].raw();
    }
    acc /= mpq_class(ef.rows[i][pc]);
    acc.canonicalize();
    x[pc] = Rational(acc);
  }
  return x;
}

std::optional<Vector> solve_unique(const Matrix& a, const Vector& b) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "solve_unique needs a square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_consistent(a, b);
}

}  // namespace eulerode
