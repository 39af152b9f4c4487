#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "eulerode/rational.hpp"

namespace eulerode {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  bool is_zero() const;
  std::string to_string() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& c, const Vector& v);
bool is_zero(const Vector& v);

struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
EchelonForm row_reduce(Matrix a);

std::size_t rank(const Matrix& a);
Rational determinant(Matrix a);

struct NullSpace {
  std::vector<Vector> vectors;
  /// free_columns[i] is the coordinate where vectors[i] has its leading 1.
  std::vector<std::size_t> free_columns;
};

NullSpace null_space(const Matrix& a);

/// Null-space basis read off the reduced echelon form: one vector per free
/// column f, with entry 1 at f and 0 at every other free column. Empty iff
/// the columns of `a` are independent.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Some solution of a x = b with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve_consistent(const Matrix& a, const Vector& b);

/// The unique solution of a square nonsingular system, nullopt if singular.
std::optional<Vector> solve_unique(const Matrix& a, const Vector& b);

}  // namespace eulerode
